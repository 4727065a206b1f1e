use std::path::PathBuf;
use std::process::Command;

const EXAMPLES: &[(&str, &str)] = &[
    ("bwb_cohomology", "Sym^2 Q*(-1): H^1 = S_(1,0,0) V*, dimension 3"),
    ("cohomology_tables", "h^0:  .  .  .  .  .  .  .  5 13 24 38"),
    ("dual_collection", "E_1 = (Sym^2 Q*)(1)  (rank 3)"),
    ("grothendieck_group", "in W^⊥: (1/3, 1/3, -2/3)"),
    ("spectral_pages", "0 <- Φ <- O(0)^2 <- O(-2)^3 <- O(-3)^1 <- 0"),
    ("pure_resolutions", "EFW witness [0, 1, 2, 3]: ranks [1, 3, 3, 1], inserted slot 1"),
    ("categorify", "a = (0, 1/3, 1)"),
    ("boij_soderberg", "roots (0,-2): 2 · π_f"),
];

/// `cargo test` builds examples next to the test binaries' `deps` directory.
fn example_path(name: &str) -> PathBuf {
    let exe = std::env::current_exe().unwrap();
    let profile = exe.parent().and_then(|d| d.parent()).unwrap();
    profile.join("examples").join(format!("{name}{}", std::env::consts::EXE_SUFFIX))
}

#[test]
fn examples_run_and_print_known_lines() {
    for (name, line) in EXAMPLES {
        let path = example_path(name);
        assert!(path.exists(), "{} missing; build examples with `cargo test`", path.display());
        let o = Command::new(&path).output().unwrap();
        let out = String::from_utf8(o.stdout).unwrap();
        assert!(o.status.success(), "{name}: {}", String::from_utf8_lossy(&o.stderr));
        assert!(out.contains(line), "{name} lacks {line:?}:\n{out}");
    }
}

#[test]
fn every_example_is_listed() {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("examples");
    let mut found: Vec<String> = std::fs::read_dir(dir)
        .unwrap()
        .filter_map(|e| e.ok()?.path().file_stem()?.to_str().map(String::from))
        .collect();
    found.sort();
    let mut listed: Vec<String> = EXAMPLES.iter().map(|(n, _)| n.to_string()).collect();
    listed.sort();
    assert_eq!(found, listed);
}
