//! Write an instance to the JSON Lines format, read it back, and run the
//! same pipeline the command-line tool runs.

use quasihopf::cli::format::{SpecFile, SubspaceRole};
use quasihopf::cli::run;
use quasihopf::families::{subgroup_quotient_ideal, twisted_dual_group_algebra};

fn main() -> quasihopf::Result<()> {
    let q = twisted_dual_group_algebra(2, 1)?;
    let spec = SpecFile::new(q.algebra, Some(q.antipode)).with_subspace(
        "I",
        SubspaceRole::Ideal,
        subgroup_quotient_ideal(2, 1)?,
    );
    let text = spec.to_jsonl();
    print!("{text}");
    assert_eq!(SpecFile::parse(&text)?.to_jsonl(), text);

    let dir = std::env::temp_dir().join(format!("quasihopf-example-{}", std::process::id()));
    std::fs::create_dir_all(&dir).map_err(|e| quasihopf::Error::Io(e.to_string()))?;
    let path = dir.join("z2.jsonl");
    std::fs::write(&path, &text).map_err(|e| quasihopf::Error::Io(e.to_string()))?;
    let outcome = run(["quasihopf", "quotient", "--file", path.to_str().unwrap(), "--ideal", "I"]);
    println!("quotient exit code {}", outcome.exit_code);
    std::fs::remove_dir_all(&dir).ok();
    Ok(())
}
