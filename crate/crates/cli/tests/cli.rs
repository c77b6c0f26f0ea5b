use std::process::{Command, Output};

fn whitehead(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_whitehead"))
        .args(args)
        .current_dir(env!("CARGO_MANIFEST_DIR"))
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = whitehead(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn code(args: &[&str]) -> i32 {
    whitehead(args).status.code().unwrap()
}

#[test]
fn nonfaces_listing() {
    assert_eq!(stdout(&["nonfaces", "--gen", "simplex-skeleton:3,0"]), "1 2\n1 3\n2 3\n");
    assert_eq!(stdout(&["nonfaces", "--gen", "simplex-skeleton:3,0", "--json"]), "[[1,2],[1,3],[2,3]]\n");
    assert_eq!(stdout(&["nonfaces", "--gen", "rp2-skeleton"]).lines().count(), 20);
    assert_eq!(stdout(&["nonfaces", "tests/data/square.cplx"]), "1 3\n2 4\n");
}

#[test]
fn parse_failures_exit_two() {
    let out = whitehead(&["nonfaces", "tests/data/bad.cplx"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 3"));
    assert_eq!(code(&["nonfaces", "tests/data/missing.cplx"]), 2);
    assert_eq!(code(&["nonfaces", "--gen", "torus"]), 2);
    assert_eq!(code(&["nonfaces", "--gen", "simplex-skeleton:3"]), 2);
    assert_eq!(code(&["nonfaces"]), 2);
    assert_eq!(code(&["nonfaces", "tests/data/square.cplx", "--gen", "rp2-skeleton"]), 2);
}

#[test]
fn fillings_listing() {
    assert_eq!(
        stdout(&["fillings", "--gen", "simplex-skeleton:3,0"]),
        "12 13\tcollapse_sequence\n12 23\tcollapse_sequence\n13 23\tcollapse_sequence\n"
    );
    let two = stdout(&["fillings", "--gen", "cross-polytope-skeleton:1", "--limit", "2"]);
    let lines: Vec<&str> = two.lines().collect();
    assert_eq!(lines.len(), 2);
    assert!(lines.iter().all(|l| l.split('\t').next().unwrap().split(' ').count() == 7));
}

#[test]
fn filling_check() {
    let out = stdout(&["fillings", "--check", "124 126 134 135 156 235 236 245 346 123", "--gen", "rp2-skeleton"]);
    assert!(out.starts_with("filling ("), "{out}");
    assert!(out.contains("10 non-faces, pure"));
    // the ten triangles without 123 close up to a projective plane
    assert_eq!(
        code(&["fillings", "--check", "124 126 134 135 156 235 236 245 346 456", "--gen", "rp2-skeleton"]),
        1
    );
    assert_eq!(code(&["fillings", "--check", "12", "--gen", "rp2-skeleton"]), 1);
    assert_eq!(code(&["fillings", "--check", "1x", "--gen", "rp2-skeleton"]), 2);
}

#[test]
fn obstructed_complex_is_a_domain_failure() {
    let out = whitehead(&["fillings", "--gen", "rp2"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("obstructed"));
}

#[test]
fn hardie_identity() {
    let out = stdout(&["identity", "--gen", "sphere-skeleton:simplex:4", "--omit", "2 3 4"]);
    assert_eq!(out.lines().next().unwrap(), "w_234 = w_123 - w_124 + w_134");
    let latex = stdout(&[
        "identity", "--gen", "simplex-skeleton:4,1", "--filling-a", "234 134 124", "--filling-b",
        "134 124 123", "--target", "1 2 3", "--format", "latex",
    ]);
    assert_eq!(latex, "w_{\\sigma_4}=w_{\\sigma_1}-w_{\\sigma_2}+w_{\\sigma_3}\n");
}

#[test]
fn projective_plane_identity() {
    let out = stdout(&[
        "identity", "--gen", "rp2-skeleton", "--filling-a", "123 124 126 134 135 156 235 236 245 346",
        "--target", "4 5 6",
    ]);
    assert_eq!(
        out.lines().next().unwrap(),
        "w_456 = 2*w_123 - w_124 - w_126 + w_134 + w_135 + w_156 - w_235 - w_236 + w_245 - w_346"
    );
    assert!(out.contains("kernel: trivial"));
}

#[test]
fn identity_json_schema() {
    let out = stdout(&["identity", "--gen", "simplex-skeleton:3,0", "--omit", "1 2", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["lhs"]["non_face"], serde_json::json!([1, 2]));
    assert_eq!(v["lhs"]["ordering"], serde_json::json!([3]));
    assert_eq!(v["rhs"].as_array().unwrap().len(), 2);
    assert_eq!(v["pure"], true);
    assert_eq!(v["unique"], true);
}

#[test]
fn identity_failures() {
    assert_eq!(code(&["identity", "--gen", "rp2-skeleton", "--omit", "1 2 3"]), 2);
    assert_eq!(code(&["identity", "--gen", "sphere-skeleton:simplex:4", "--omit", "1 2"]), 1);
    assert_eq!(
        code(&["identity", "--gen", "simplex-skeleton:3,0", "--filling-a", "23 13", "--filling-b", "13 12", "--target", "2 3"]),
        1
    );
    assert_eq!(code(&["identity", "--gen", "simplex-skeleton:3,0"]), 2);
}

#[test]
fn identity_from_sphere_file() {
    let out = stdout(&["identity", "tests/data/octahedron.cplx", "--omit", "1 3 5"]);
    let first = out.lines().next().unwrap();
    assert!(first.starts_with("w_135 = "));
    assert_eq!(first.matches("w_").count(), 8);
}

#[test]
fn jacobi_outputs() {
    let out = stdout(&["jacobi", "1", "1", "1"]);
    assert!(out.contains("[[e1,e2],e3] + [[e2,e3],e1] + [[e3,e1],e2] = 0"));
    assert!(out.contains("signs: + + +"));
    assert!(out.ends_with("oracle: ok\n"));
    assert!(stdout(&["jacobi", "1", "2", "3"]).contains("signs: - + +"));
    assert_eq!(code(&["jacobi", "0", "1", "1"]), 2);
}

#[test]
fn output_is_reproducible() {
    for args in [
        &["fillings", "--gen", "rp2-skeleton", "--limit", "20"][..],
        &["identity", "--gen", "cross-polytope-skeleton:2", "--omit", "1 3 5 7", "--format", "json"][..],
        &["nonfaces", "--gen", "cross-polytope-skeleton:2"][..],
    ] {
        assert_eq!(whitehead(args).stdout, whitehead(args).stdout, "{args:?}");
    }
}
