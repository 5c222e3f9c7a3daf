//! End-to-end runs of every build subcommand through structure files.

use std::path::PathBuf;
use std::process::Command;
use std::sync::Arc;

use homhopf::registry::{build_h4, h4_automorphism};
use homhopf::scalar::int;
use homhopf::yd::{canonical_yd, graded_pair, AutPair};
use homhopf_cli::format::{self, CarrierRef};

struct Env {
    bin: &'static str,
    dir: PathBuf,
}

impl Env {
    fn new(tag: &str) -> Env {
        let dir = std::env::temp_dir().join(format!("homhopf-cli-{tag}-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        Env {
            bin: env!("CARGO_BIN_EXE_homhopf"),
            dir,
        }
    }

    fn path(&self, name: &str) -> PathBuf {
        self.dir.join(name)
    }

    fn run(&self, args: &[&str]) -> (Option<i32>, String, String) {
        let out = Command::new(self.bin)
            .current_dir(&self.dir)
            .args(args)
            .output()
            .unwrap();
        (
            out.status.code(),
            String::from_utf8_lossy(&out.stdout).to_string(),
            String::from_utf8_lossy(&out.stderr).to_string(),
        )
    }

    fn expect_ok(&self, args: &[&str]) -> String {
        let (code, stdout, stderr) = self.run(args);
        assert_eq!(code, Some(0), "args {args:?}: {stderr}");
        stdout
    }
}

impl Drop for Env {
    fn drop(&mut self) {
        std::fs::remove_dir_all(&self.dir).ok();
    }
}

#[test]
fn every_build_subcommand_runs() {
    let env = Env::new("builds");

    // carrier at c = 1 (admits pairs in involution on the antidiagonal)
    env.expect_ok(&["examples", "h4", "--c", "1", "-o", "h4.json"]);

    // fixture files written through the format API
    let h = Arc::new(build_h4(&int(1)).unwrap());
    let anti = AutPair::new(
        h4_automorphism(&h, &int(-2)).unwrap(),
        h4_automorphism(&h, &int(2)).unwrap(),
    )
    .unwrap();
    format::write_file(
        &env.path("pair.json"),
        &format::autpair_to_file(&anti, CarrierRef::Path("h4.json".into())),
    )
    .unwrap();

    let yd = canonical_yd(&anti);
    format::write_file(
        &env.path("yd.json"),
        &format::yd_to_file(&yd, CarrierRef::Path("h4.json".into())),
    )
    .unwrap();
    let graded = canonical_yd(&graded_pair(&h, 1).unwrap());
    format::write_file(
        &env.path("graded1.json"),
        &format::yd_to_file(&graded, CarrierRef::Path("h4.json".into())),
    )
    .unwrap();

    env.expect_ok(&["check", "yd-module", "yd.json"]);

    env.expect_ok(&["build", "dual-module", "--yd", "yd.json", "-o", "yd-dual.json"]);
    env.expect_ok(&["check", "yd-module", "yd-dual.json"]);

    env.expect_ok(&[
        "build", "yd-tensor", "--left", "yd.json", "--right", "yd-dual.json", "-o", "tensor.json",
    ]);
    env.expect_ok(&["check", "yd-module", "tensor.json"]);

    env.expect_ok(&[
        "build",
        "nyd-tensor",
        "--left",
        "graded1.json",
        "--grade-left",
        "1",
        "--right",
        "graded1.json",
        "--grade-right",
        "1",
        "-o",
        "graded2.json",
    ]);

    // the short factor aliases work for the braiding build
    env.expect_ok(&[
        "build", "braiding", "--m", "graded1.json", "--grade-left", "1", "--n", "graded1.json",
        "--grade-right", "1", "-o", "braid.json",
    ]);

    // the pair (-2, 2) admits the character with value -1 on g and the unit
    // group-like
    env.expect_ok(&[
        "build", "twist", "--yd", "yd.json", "--theta", "1,-1,0,0", "--omega", "1,0,0,0", "-o",
        "flat.json",
    ]);
    env.expect_ok(&["check", "yd-module", "flat.json"]);

    // the anti-YD label is (-1, 1); the modular pair is the same character
    let anti_yd_pair = graded_pair(&h, 1).unwrap();
    let anti_mod = canonical_yd(&anti_yd_pair);
    format::write_file(
        &env.path("anti.json"),
        &format::yd_to_file(&anti_mod, CarrierRef::Path("h4.json".into())),
    )
    .unwrap();
    env.expect_ok(&[
        "build", "anti-yd", "--yd", "anti.json", "--theta", "1,-1,0,0", "--omega", "1,0,0,0",
        "-o", "unlabeled.json",
    ]);
    env.expect_ok(&["check", "yd-module", "unlabeled.json"]);

    // shifting by the beta component of the pair removes the label
    let diag = AutPair::new(
        h4_automorphism(&h, &int(3)).unwrap(),
        h4_automorphism(&h, &int(3)).unwrap(),
    )
    .unwrap();
    format::write_file(
        &env.path("diag.json"),
        &format::autpair_to_file(&diag, CarrierRef::Path("h4.json".into())),
    )
    .unwrap();
    let m_diag = canonical_yd(&diag);
    format::write_file(
        &env.path("yd-diag.json"),
        &format::yd_to_file(&m_diag, CarrierRef::Path("h4.json".into())),
    )
    .unwrap();
    env.expect_ok(&[
        "build", "shift", "--yd", "yd-diag.json", "--pair", "diag.json", "--side", "beta", "-o",
        "shifted.json",
    ]);

    env.expect_ok(&["build", "functor-F", "--yd", "yd.json", "-o", "module.json"]);
    env.expect_ok(&["check", "module", "module.json"]);
    env.expect_ok(&[
        "build", "functor-G", "--alg", "h4.json", "--pair", "pair.json", "--module",
        "module.json", "-o", "yd-back.json",
    ]);
    // the round trip reproduces the module file byte for byte
    let a = std::fs::read(env.path("yd.json")).unwrap();
    let b = std::fs::read(env.path("yd-back.json")).unwrap();
    assert_eq!(a, b);

    // cor49 via the sweep
    let stdout = env.expect_ok(&[
        "build", "cor49", "--alg", "h4.json", "--pair", "pair.json", "-o", "iso.json",
    ]);
    assert!(stdout.contains("PASS cor49/forward-multiplicative"));

    // JSON report format
    let stdout = env.expect_ok(&["--format", "json", "check", "hopf", "h4.json"]);
    let doc: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(doc["passed"], serde_json::json!(true));
    assert!(doc["checks"].as_array().unwrap().len() > 20);
}

#[test]
fn bicomodule_and_comodule_checks_through_files() {
    let env = Env::new("kinds");
    env.expect_ok(&["examples", "h4", "--c", "2", "-o", "h4.json"]);
    let h = Arc::new(build_h4(&int(2)).unwrap());

    let p = AutPair::new(
        h4_automorphism(&h, &int(2)).unwrap(),
        h4_automorphism(&h, &int(3)).unwrap(),
    )
    .unwrap();
    let bico = homhopf::yd::alpha_beta_bicomodule(&p);
    format::write_file(
        &env.path("bico.json"),
        &format::bicomodule_to_file(&bico, CarrierRef::Path("h4.json".into())),
    )
    .unwrap();
    env.expect_ok(&["check", "bicomodule-algebra", "bico.json"]);
    env.expect_ok(&[
        "build", "diagonal", "--alg", "h4.json", "--bicomodule", "bico.json", "-o", "prod.json",
    ]);

    let co = homhopf::rep::HomComodule::new(h.coalgebra(), 4, h.xi.clone(), h.comult.clone());
    format::write_file(
        &env.path("co.json"),
        &format::comodule_to_file(&co, CarrierRef::Path("h4.json".into())),
    )
    .unwrap();
    env.expect_ok(&["check", "comodule", "co.json"]);

    // inline carriers work too
    let inline = format::comodule_to_file(
        &co,
        CarrierRef::Inline(Box::new(format::hopf_to_file(&h))),
    );
    format::write_file(&env.path("co-inline.json"), &inline).unwrap();
    env.expect_ok(&["check", "comodule", "co-inline.json"]);
}
