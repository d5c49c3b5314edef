use std::process::Command;

/// Replays every `$ fmzv ...` line in the command-line chapter and compares
/// the output that follows it.
#[test]
fn console_transcripts_match() {
    let text = include_str!("../../../book/src/cli.md");
    let mut blocks = Vec::new();
    let mut current: Option<Vec<&str>> = None;
    for line in text.lines() {
        match (&mut current, line) {
            (None, "```console") => current = Some(Vec::new()),
            (Some(_), "```") => blocks.push(current.take().unwrap()),
            (Some(b), l) => b.push(l),
            _ => {}
        }
    }
    let mut ran = 0;
    for block in blocks {
        let mut i = 0;
        while i < block.len() {
            let cmd = block[i]
                .strip_prefix("$ fmzv ")
                .expect("transcript line starts with $");
            let mut expected = String::new();
            i += 1;
            while i < block.len() && !block[i].starts_with("$ ") {
                expected += block[i];
                expected.push('\n');
                i += 1;
            }
            let out = Command::new(env!("CARGO_BIN_EXE_fmzv"))
                .args(cmd.split_whitespace())
                .env_remove("FMZV_DEFAULT_PRIMES")
                .output()
                .unwrap();
            let shown = if out.status.success() {
                out.stdout
            } else {
                out.stderr
            };
            let shown = String::from_utf8(shown).unwrap();
            assert!(shown.starts_with(&expected), "fmzv {cmd}\n{shown}");
            ran += 1;
        }
    }
    assert!(ran >= 5);
}
