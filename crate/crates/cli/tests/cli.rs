use std::process::Command;

fn run(args: &[&str]) -> (u8, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("coxtile").chain(args.iter().copied());
    let code = coxtile_cli::run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

#[test]
fn count_only() {
    assert_eq!(
        run(&[
            "words",
            "enumerate",
            "--host",
            "A2",
            "--element",
            "3 2 1",
            "--count-only"
        ]),
        (0, "2\n".into(), String::new())
    );
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(run(&["tile", "--host", "A3", "--word", "bad"]).0, 2);
    assert_eq!(run(&["tile", "--host", "A3", "--word", "1 1"]).0, 2);
    assert_eq!(run(&["tile", "--host", "B3", "--word", "1"]).0, 2);
    assert_eq!(run(&["verify", "--case", "nope"]).0, 2);
    assert_eq!(
        run(&[
            "words",
            "enumerate",
            "--host",
            "D4",
            "--element",
            "-1 2 3 4"
        ])
        .0,
        2
    );
    assert_eq!(run(&["frobnicate"]).0, 2);
    assert_eq!(run(&["embed", "--row", "E6-F4"]).0, 2);
    assert_eq!(run(&["--help"]).0, 0);
}

#[test]
fn verify_line_format() {
    let (code, out, _) = run(&["verify", "--case", "h3-in-d6"]);
    assert_eq!(code, 0);
    assert_eq!(
        out,
        "case=h3-in-d6 words=286 classes=286 tilings=286 ok=true\n"
    );
}

#[test]
fn limits_hit_exit_1() {
    let (code, _, err) = run(&["--max-group-order", "100", "info", "--host", "A5"]);
    assert_eq!(code, 1);
    assert!(err.contains("error"), "{err}");
}

#[test]
fn config_file_env_and_flags() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("coxtile.conf");
    std::fs::write(&cfg, "# tiny\nmax_group_order = 100\n").unwrap();
    let cfg = cfg.to_str().unwrap();
    assert_eq!(run(&["--config", cfg, "info", "--host", "A5"]).0, 1);
    assert_eq!(
        run(&[
            "--config",
            cfg,
            "--max-group-order",
            "1000",
            "info",
            "--host",
            "A5"
        ])
        .0,
        0
    );

    let bin = env!("CARGO_BIN_EXE_coxtile");
    let status = Command::new(bin)
        .args(["info", "--host", "A5"])
        .env(coxtile_cli::CONFIG_ENV, cfg)
        .output()
        .unwrap();
    assert_eq!(status.status.code(), Some(1));
    let bad = dir.path().join("bad.conf");
    std::fs::write(&bad, "colour = blue\n").unwrap();
    assert_eq!(
        run(&["--config", bad.to_str().unwrap(), "info", "--host", "A3"]).0,
        2
    );
}

#[test]
fn svg_files() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.svg");
    let b = dir.path().join("b.svg");
    let (code, out, _) = run(&[
        "tile",
        "--host",
        "A2",
        "--word",
        "1 2 1",
        "--svg",
        a.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    assert!(
        out.starts_with("host=A2 border=3,2,1 tiles=3 rhombus=3"),
        "{out}"
    );
    let svg = std::fs::read_to_string(&a).unwrap();
    assert_eq!(svg.matches("<path").count(), 3);
    assert_eq!(
        run(&[
            "render",
            "--row",
            "D6-H3",
            "--xword",
            "1 2 3",
            "--regular",
            "--palette",
            "mono",
            "--svg",
            b.to_str().unwrap()
        ])
        .0,
        0
    );
    assert!(std::fs::read_to_string(&b).unwrap().contains("#e0e0e0"));
    let (code, out, _) = run(&["render", "--host", "D4", "--word", "1 2"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("<?xml"));
}

#[test]
fn info_embed_and_classes() {
    let (_, out, _) = run(&["info", "--host", "D4"]);
    assert!(out.contains("order=192 longest_length=12"), "{out}");
    let (_, out, _) = run(&["embed", "--row", "D5-B4", "--verify-matrix"]);
    assert!(out.ends_with("ok=true\n"));
    let (code, out, _) = run(&["embed", "--row", "A5-B3", "--sword", "3 1 5"]);
    assert_eq!(code, 0, "{out}");
    assert_eq!(out, "t1=[3] t3=[1 5]\nx_word=1 3\n");
    let (_, out, _) = run(&[
        "classes",
        "--host",
        "A3",
        "--element",
        "4 3 2 1",
        "--count-only",
    ]);
    assert_eq!(out, "words=16 classes=8 relations={1-3}\n");
    let (_, out, _) = run(&[
        "words",
        "classes",
        "--host",
        "A3",
        "--element",
        "s1 s2 s1",
        "--relations",
        "none",
    ]);
    assert!(out.starts_with("words=2 classes=2 relations={}"));
}
