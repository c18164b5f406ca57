use assert_cmd::Command;
use schurhopf::char_rings::{tensor_product, BasisLabel, CharElement, CharTensor};
use schurhopf::partition::Partition;
use schurhopf::schur_ring::{SchurElement, TensorElement};

fn cmd() -> Command {
    Command::cargo_bin("schurhopf").unwrap()
}

fn stdout(args: &[&str]) -> String {
    let out = cmd().args(args).output().unwrap();
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn code(args: &[&str]) -> i32 {
    cmd().args(args).output().unwrap().status.code().unwrap()
}

fn p(text: &str) -> Partition {
    text.parse().unwrap()
}

#[test]
fn schur_golden() {
    cmd()
        .args(["schur", "mul", "2^2", "21"])
        .assert()
        .success()
        .stdout("{43}+{421}+{3^2 1}+{32^2}+{321^2}+{2^3 1}\n");
    cmd()
        .args(["schur", "antipode", "2"])
        .assert()
        .success()
        .stdout("{1^2}\n");
    cmd()
        .args(["schur", "scalar", "21", "21"])
        .assert()
        .success()
        .stdout("1\n");
    cmd().args(["schur", "counit", "0"]).assert().success().stdout("1\n");
    cmd()
        .args(["schur", "skew", "21", "1"])
        .assert()
        .success()
        .stdout("{2}+{1^2}\n");
    cmd()
        .args(["schur", "coproduct", "2"])
        .assert()
        .success()
        .stdout("{2}⊗{0}+{1}⊗{1}+{0}⊗{2}\n");
}

#[test]
fn series_golden() {
    cmd()
        .args(["series", "D", "--max-degree", "6"])
        .assert()
        .success()
        .stdout("{0}\n{2}\n{4}+{2^2}\n{6}+{42}+{2^3}\n");
    cmd()
        .args(["series", "B", "--max-degree", "4"])
        .assert()
        .success()
        .stdout("{0}\n{1^2}\n{2^2}+{1^4}\n");
    cmd()
        .args(["series", "A", "--max-degree", "2"])
        .assert()
        .success()
        .stdout("{0}\n-{1^2}\n");
    cmd()
        .args(["series", "C", "--max-degree", "4"])
        .assert()
        .success()
        .stdout("{0}\n-{2}\n{31}\n");
}

#[test]
fn char_golden() {
    cmd()
        .args(["char", "branch", "--to", "O", "2^2 1^2"])
        .assert()
        .success()
        .stdout("[2^2 1^2]+[21^2]+[1^2]\n");
    cmd()
        .args(["char", "branch", "--to", "Sp", "{1^4}"])
        .assert()
        .success()
        .stdout("⟨1^4⟩+⟨1^2⟩+⟨0⟩\n");
    cmd()
        .args(["char", "tensor", "--basis", "Sp", "2^2", "21"])
        .assert()
        .success()
        .stdout("⟨43⟩+⟨421⟩+⟨3^2 1⟩+⟨32^2⟩+⟨321^2⟩+⟨2^3 1⟩+⟨41⟩+2⟨32⟩+2⟨31^2⟩+2⟨2^2 1⟩+⟨21^3⟩+⟨3⟩+2⟨21⟩+⟨1^3⟩+⟨1⟩\n");
    cmd()
        .args(["char", "convert", "--from", "GL", "--to", "O", "2"])
        .assert()
        .success()
        .stdout("[2]+[0]\n");
    cmd()
        .args(["char", "counit", "--basis", "O", "2"])
        .assert()
        .success()
        .stdout("-1\n");
    cmd()
        .args(["char", "counit", "--basis", "Sp", "1^2"])
        .assert()
        .success()
        .stdout("-1\n");
    cmd()
        .args(["char", "antipode", "--basis", "GL", "21"])
        .assert()
        .success()
        .stdout("-{21}\n");
}

#[test]
fn generic_tensor_matches_direct_rule() {
    for basis in ["O", "Sp"] {
        let direct = stdout(&["char", "tensor", "--basis", basis, "21", "1^2"]);
        let generic = stdout(&["char", "tensor", "--basis", basis, "--generic", "21", "1^2"]);
        assert_eq!(direct, generic);
    }
}

#[test]
fn eval_golden() {
    cmd()
        .args(["eval", "SO(3)", "1", "--basis", "O", "--at", "2"])
        .assert()
        .success()
        .stdout("7/2\n");
    cmd()
        .args(["eval", "GL(2)", "21", "--at", "1/2,-3"])
        .assert()
        .success()
        .stdout("15/4\n");
    cmd()
        .args(["eval", "Sp(4)", "1", "--basis", "Sp", "--at", "1/2,3"])
        .assert()
        .success()
        .stdout("35/6\n");
}

#[test]
fn verify_suites_pass() {
    for suite in ["tables", "cauchy", "series"] {
        cmd().args(["verify", suite]).assert().success();
    }
    cmd().args(["verify", "hopf", "--max-degree", "5"]).assert().success();
    let json: serde_json::Value = serde_json::from_str(&stdout(&["--format", "json", "verify", "tables"])).unwrap();
    assert_eq!(json["passed"], true);
    assert_eq!(json["checks"].as_array().unwrap().len(), 9);
}

#[test]
fn output_is_byte_stable() {
    let args = ["char", "tensor", "--basis", "O", "2^2", "21"];
    let first = cmd().args(args).output().unwrap().stdout;
    for _ in 0..3 {
        assert_eq!(cmd().args(args).output().unwrap().stdout, first);
    }
    let args = ["--format", "json", "schur", "coproduct", "321"];
    let first = cmd().args(args).output().unwrap().stdout;
    assert_eq!(cmd().args(args).output().unwrap().stdout, first);
}

#[test]
fn json_round_trips() {
    let product: SchurElement =
        serde_json::from_str(&stdout(&["--format", "json", "schur", "mul", "2^2", "21"])).unwrap();
    assert_eq!(
        product,
        SchurElement::basis(p("2^2")).multiply(&SchurElement::basis(p("21")))
    );

    let delta: TensorElement =
        serde_json::from_str(&stdout(&["--format", "json", "schur", "coproduct", "32"])).unwrap();
    assert_eq!(delta, SchurElement::basis(p("32")).coproduct());

    let o: CharElement = serde_json::from_str(&stdout(&[
        "--format", "json", "char", "tensor", "--basis", "O", "2^2", "21",
    ]))
    .unwrap();
    assert_eq!(o, tensor_product(&p("2^2"), &p("21"), BasisLabel::O));

    let text = stdout(&["--format", "json", "char", "coproduct", "--basis", "Sp", "21"]);
    let sp: CharTensor = serde_json::from_str(&text).unwrap();
    assert_eq!(sp.basis, BasisLabel::Sp);
    assert_eq!(format!("{}\n", serde_json::to_string(&sp).unwrap()), text);
}

#[test]
fn exit_codes() {
    assert_eq!(code(&["schur", "mul", "2x", "1"]), 2);
    assert_eq!(code(&["schur", "mul", "3,4", "1"]), 2);
    assert_eq!(code(&["schur", "frobnicate", "1"]), 2);
    assert_eq!(code(&["eval", "GL(2)", "1", "--at", "1/0,1"]), 2);
    assert_eq!(code(&["series", "D", "--max-degree", "30"]), 3);
    assert_eq!(code(&["char", "branch", "--to", "O", "5", "--max-degree", "4"]), 3);
    assert_eq!(
        code(&[
            "char",
            "tensor",
            "--basis",
            "Sp",
            "--generic",
            "3",
            "2",
            "--max-degree",
            "4"
        ]),
        3
    );
    assert_eq!(code(&["char", "branch", "--to", "GL", "2"]), 4);
    assert_eq!(code(&["char", "tensor", "--basis", "O", "[2]", "⟨1⟩"]), 4);
    assert_eq!(code(&["schur", "mul", "[2]", "1"]), 4);
    assert_eq!(code(&["eval", "SO(3)", "1^2", "--basis", "O", "--at", "2"]), 4);
    assert_eq!(code(&["schur", "mul", "2", "1"]), 0);
}

#[test]
fn cache_size_does_not_change_results() {
    let args = ["char", "tensor", "--basis", "O", "32", "21"];
    let cached = cmd().args(args).output().unwrap().stdout;
    for size in ["0", "1", "7"] {
        let out = cmd().env("SCHURHOPF_LR_CACHE", size).args(args).output().unwrap();
        assert!(out.status.success());
        assert_eq!(out.stdout, cached, "cache size {size}");
    }
}
