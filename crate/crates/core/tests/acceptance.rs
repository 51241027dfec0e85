//! Runs `kronmcm accept` twice with the same seed and prints one line per
//! criterion. Criterion 13 also requires the two outputs to be identical.

use std::process::{Command, Stdio};

fn spawn(seed: &str) -> std::process::Child {
    Command::new(env!("CARGO_BIN_EXE_kronmcm"))
        .args(["accept", "--format", "records", "--seed", seed])
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("kronmcm binary")
}

fn field<'a>(line: &'a str, key: &str) -> Option<&'a str> {
    let rest = &line[line.find(&format!(" {key}:"))? + key.len() + 2..];
    let v = if let Some(q) = rest.strip_prefix('"') { &q[..q.find('"')?] } else { rest.split(' ').next()? };
    Some(v)
}

fn main() {
    let seed = std::env::var("KRONMCM_SEED").unwrap_or_else(|_| "0".into());
    let runs: Vec<_> = [spawn(&seed), spawn(&seed)].into_iter().map(|c| c.wait_with_output().expect("accept run")).collect();
    let first = String::from_utf8_lossy(&runs[0].stdout).into_owned();
    let second = String::from_utf8_lossy(&runs[1].stdout).into_owned();
    if !runs[0].stderr.is_empty() {
        eprint!("{}", String::from_utf8_lossy(&runs[0].stderr));
    }

    let mut failed = 0;
    for id in 1..=13 {
        let line = first.lines().find(|l| l.starts_with("criterion ") && field(l, "id") == Some(&id.to_string()));
        let mut pass = line.and_then(|l| field(l, "status")) == Some("pass");
        let title = line.and_then(|l| field(l, "title")).unwrap_or("missing from output");
        let mut note = String::new();
        if id == 13 {
            let same = first == second && runs[0].status.code() == runs[1].status.code();
            note = format!(" (separate processes identical: {same})");
            pass &= same;
        }
        if !pass {
            failed += 1;
            let prefix = format!("check criterion:{id} ");
            for l in first.lines().filter(|l| l.starts_with(&prefix) && field(l, "status") == Some("fail")) {
                eprintln!("    {l}");
            }
        }
        println!("criterion {id:>2} {}: {title}{note}", if pass { "pass" } else { "FAIL" });
    }
    println!("acceptance seed {seed}: {} of 13 criteria pass", 13 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
