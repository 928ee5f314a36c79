use std::io::Write;
use std::process::{Command, Output, Stdio};

fn wordsort(args: &[&str], stdin: &[u8]) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_wordsort"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(stdin).unwrap();
    child.wait_with_output().unwrap()
}

fn ok(args: &[&str], stdin: &[u8]) -> Vec<u8> {
    let out = wordsort(args, stdin);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    out.stdout
}

fn code(args: &[&str], stdin: &[u8]) -> i32 {
    wordsort(args, stdin).status.code().unwrap()
}

const EXAMPLE: &[u8] = b"123\n12\n121\n1212\n";

#[test]
fn root_records() {
    assert_eq!(
        ok(&["root"], b"abab\nabc\n"),
        b"abab\tab\t2\tfalse\nabc\tabc\t1\ttrue\n"
    );
}

#[test]
fn compare_records() {
    assert_eq!(ok(&["compare", "12", "1212"], b""), b"=\t121212\t121212\n");
    assert_eq!(ok(&["compare", "121", "12"], b""), b"<\t12112\t12121\n");
    assert_eq!(ok(&["compare", "2", "12"], b""), b">\t212\t122\n");
}

#[test]
fn sort_orders_and_groups() {
    assert_eq!(ok(&["sort"], EXAMPLE), b"121\n12\n1212\n123\n");
    assert_eq!(
        ok(&["sort", "--mode", "inf"], EXAMPLE),
        b"121\n12\n1212\n123\n"
    );
    assert_eq!(
        ok(&["sort", "--groups", "--verify"], EXAMPLE),
        b"121\n\n12\n1212\n\n123\n"
    );
    assert_eq!(ok(&["sort"], b""), b"");
}

#[test]
fn sort_is_a_fixed_point() {
    let input = b"ba\nb\nab\na\nbab\nbb\naba\nbabab\nab\n";
    let once = ok(&["sort"], input);
    assert_eq!(ok(&["sort"], &once), once);
}

#[test]
fn rearrange_both_objectives() {
    assert_eq!(
        ok(&["rearrange", "--verify"], EXAMPLE),
        b"121121212123\n2 1 3 0\n"
    );
    assert_eq!(
        ok(&["rearrange", "--objective", "max", "--verify"], EXAMPLE),
        b"123121212121\n0 1 3 2\n"
    );
}

#[test]
fn nul_delimited() {
    assert_eq!(ok(&["sort", "--null"], b"1\x001\n2\x00"), b"1\n2\x001\x00");
    assert_eq!(
        ok(&["rearrange", "--null"], b"b\x00a\x00"),
        b"ab\x001 0\x00"
    );
}

#[test]
fn input_file_argument() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("words.txt");
    std::fs::write(&path, EXAMPLE).unwrap();
    assert_eq!(
        ok(&["sort", path.to_str().unwrap()], b""),
        b"121\n12\n1212\n123\n"
    );
    assert_eq!(ok(&["sort", "-"], EXAMPLE), b"121\n12\n1212\n123\n");
}

#[test]
fn exit_codes() {
    assert_eq!(code(&["sort"], b"a\n\nb\n"), 2);
    let out = wordsort(&["sort"], b"a\n\nb\n");
    assert_eq!(
        String::from_utf8_lossy(&out.stderr).trim(),
        "wordsort: line 2: empty word"
    );
    assert_eq!(code(&["sort", "--mode", "inf", "--groups"], EXAMPLE), 2);
    assert_eq!(code(&["rearrange"], b""), 2);
    assert_eq!(
        code(&["rearrange", "--verify"], b"1\n2\n3\n4\n5\n6\n7\n8\n9\n"),
        2
    );
    assert_eq!(code(&["compare", "", "a"], b""), 2);
    assert_eq!(code(&["bench", "--reps", "1"], b""), 2);
    assert_eq!(code(&["bench", "--sizes", "4"], b""), 2);
    assert_eq!(code(&["sort", "/nonexistent/words.txt"], b""), 3);
}

#[test]
fn bench_records() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bench.csv");
    let table = ok(
        &[
            "bench",
            "--sizes",
            "4:8,8:8",
            "--reps",
            "3",
            "--record",
            path.to_str().unwrap(),
        ],
        b"",
    );
    assert!(!table.is_empty());
    let csv = std::fs::read_to_string(&path).unwrap();
    let lines: Vec<&str> = csv.lines().collect();
    assert_eq!(lines.len(), 2);
    for (line, n) in lines.iter().zip([4, 8]) {
        let fields: Vec<u64> = line.split(',').map(|f| f.parse().unwrap()).collect();
        assert_eq!(fields.len(), 5);
        assert_eq!(fields[..2], [n, 8]);
        assert!(fields[2] > 0);
    }
}
