use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty word")]
    EmptyWord,
    #[error("empty input: at least one word is required")]
    EmptyInput,
    #[error("word at index {index} is not primitive")]
    NotPrimitive { index: usize },
    #[error("words at indices {first} and {second} are equal")]
    NotDistinct { first: usize, second: usize },
    #[error("{n} words exceed the exhaustive search limit of {max}")]
    TooLarge { n: usize, max: usize },
    #[error("bad parameter: {0}")]
    BadParameter(String),
}
