//! Acceptance suite: one test per criterion, zero tolerance everywhere
//! (all arithmetic is exact). Each test prints a pass line; run with
//! `cargo test --test acceptance -- --nocapture` to see them.

use moduli_forge::evidence::CertStatus;
use moduli_forge::exact::{QuadExt, QuadNumber, Rat, RatFunc, Ring};
use moduli_forge::finite_groups::{
    classes_connected, enumerate_smooth_epis, hurwitz_move, s4_standard_generators, word_eval,
    CensusMode, GenVector, HurwitzMove, Perm,
};
use moduli_forge::homology::{
    classify_rational, homology_genus, homology_moduli_report, legendre_cover_check,
};
use moduli_forge::kft::{
    branch_sign_flip_record, kft_branch_data, kft_companions, kft_equivalent, kft_group_check,
    kft_invariants, kft_moduli_field, kft_separation_record, klein_automorphism_check,
    klein_point, q_invariance_check, AlgValue, BranchSign,
};
use moduli_forge::moebius::{anharmonic_orbit, j_invariant};
use moduli_forge::signatures::{classify_quadrangular, rh_genus, DefinabilityCase, Signature};
use std::collections::BTreeMap;
use std::process::Command;

fn sig(orders: &[u64]) -> Signature {
    Signature::new(0, orders.to_vec()).unwrap()
}

fn all_orderings(v: &[u64; 4]) -> Vec<Vec<u64>> {
    let mut out = Vec::new();
    let mut idx = vec![0usize, 1, 2, 3];
    permute(&mut idx, 4, v, &mut out);
    out.sort();
    out.dedup();
    out
}

fn permute(idx: &mut Vec<usize>, k: usize, v: &[u64; 4], out: &mut Vec<Vec<u64>>) {
    if k <= 1 {
        out.push(idx.iter().map(|&i| v[i]).collect());
        return;
    }
    for i in 0..k {
        permute(idx, k - 1, v, out);
        if k % 2 == 0 {
            idx.swap(i, k - 1);
        } else {
            idx.swap(0, k - 1);
        }
    }
}

#[test]
fn criterion_01_classification() {
    let c = |orders: &[u64]| classify_quadrangular(&sig(orders)).unwrap();
    assert_eq!(c(&[2, 2, 2, 3]).case, DefinabilityCase::Case1);
    assert_eq!(c(&[2, 2, 2, 3]).extension_degree_bound, Some(1));
    assert_eq!(c(&[2, 2, 3, 3]).case, DefinabilityCase::Case2);
    assert_eq!(c(&[2, 2, 3, 3]).extension_degree_bound, Some(2));
    for a in [2u64, 3, 5, 9] {
        assert_eq!(c(&[a, a, a, a]).case, DefinabilityCase::Case3);
        assert_eq!(c(&[a, a, a, a]).extension_degree_bound, Some(4));
    }
    // exhaustive over the five multiplicity patterns
    let patterns: [([u64; 4], DefinabilityCase, u32); 5] = [
        ([2, 3, 5, 7], DefinabilityCase::Case1, 1),
        ([2, 2, 3, 5], DefinabilityCase::Case1, 1),
        ([2, 2, 3, 3], DefinabilityCase::Case2, 2),
        ([2, 2, 2, 3], DefinabilityCase::Case1, 1),
        ([3, 3, 3, 3], DefinabilityCase::Case3, 4),
    ];
    for (orders, case, bound) in patterns {
        // permutation invariance across every ordering of the tuple
        for o in all_orderings(&orders) {
            let v = classify_quadrangular(&sig(&o)).unwrap();
            assert_eq!(v.case, case, "ordering {o:?}");
            assert_eq!(v.extension_degree_bound, Some(bound));
        }
    }
    println!("[PASS] criterion 1: quadrangular classification (cases, bounds, permutation invariance)");
}

#[test]
fn criterion_02_riemann_hurwitz_table() {
    assert_eq!(rh_genus(&sig(&[2, 2, 2, 3]), 24).unwrap(), 3);
    assert_eq!(rh_genus(&sig(&[2, 3, 7]), 168).unwrap(), 3);
    assert_eq!(rh_genus(&sig(&[2, 3, 8]), 96).unwrap(), 3);
    assert_eq!(rh_genus(&sig(&[2, 4, 6]), 48).unwrap(), 3);
    for a in 2..=12u64 {
        assert_eq!(
            rh_genus(&sig(&[a, a, a, a]), a * a * a).unwrap(),
            1 + a * a * (a - 2),
            "four equal orders a = {a}"
        );
    }
    println!("[PASS] criterion 2: Riemann-Hurwitz genus table, exact integer equality");
}

#[test]
fn criterion_03_kft_certificate_battery() {
    let lam = RatFunc::var();
    let group = kft_group_check(&lam).unwrap();
    assert!(group.all_passed(), "{group}");
    // the presentation relations hold strictly, not merely on the curve
    for cert in &group.certificates {
        if cert.name.contains("identity") {
            assert_eq!(cert.status, CertStatus::PassStrict, "{}", cert.name);
        }
    }
    let q = q_invariance_check(&lam).unwrap();
    assert!(q.all_passed(), "{q}");
    println!("[PASS] criterion 3: S4 battery with symbolic lambda (preservation, relations, order 24, Q invariance)");
}

#[test]
fn criterion_04_branch_identities() {
    let lam = RatFunc::var();
    let data = kft_branch_data(&lam, BranchSign::Plus).unwrap();
    assert!(data.record.all_passed(), "{}", data.record);
    let flip = branch_sign_flip_record(&lam).unwrap();
    assert!(flip.all_passed(), "{flip}");
    println!("[PASS] criterion 4: branch identities in Q(lambda)[s]/(s^2-(lambda^2-lambda-2)): F(mu)=G, T(inf)=mu, flip sends mu to eta(mu), mu+eta(mu)=G");
}

#[test]
fn criterion_05_companion_fiber() {
    let lam = RatFunc::var();
    let comps = kft_companions(&lam).unwrap();
    assert!(comps.record.all_passed(), "{}", comps.record);

    // lambda = -5/2: G = 4 and the companion set is {-5/2, 2}
    let r = Rat::new(-5, 2).unwrap();
    assert_eq!(kft_invariants(&r).unwrap().g, Rat::from_int(4));
    let comps = kft_companions(&r).unwrap();
    assert!(comps.record.all_passed(), "{}", comps.record);
    let sval = Rat::new(3, 2).unwrap(); // sqrt(25/4 - 4)
    let spec = |x: &QuadExt<Rat>, s: &Rat| x.base_part().add(&x.radical_part().mul(s));
    let got: Vec<Rat> = vec![spec(&comps.lambda2, &sval), spec(&comps.lambda3, &sval)];
    assert!(got.contains(&Rat::from_int(2)));
    assert!(got.contains(&r));
    println!("[PASS] criterion 5: companion fiber identity in Q(lambda)[s]/(s^2-(lambda^2-4)); at -5/2: G=4 and companions {{-5/2, 2}}");
}

#[test]
fn criterion_06_separation() {
    let rec = kft_separation_record().unwrap();
    assert!(rec.all_passed(), "{rec}");
    // explicitly: j3 separates both companions
    for which in ["lambda2", "lambda3"] {
        assert!(rec
            .certificates
            .iter()
            .any(|c| c.name.contains(&format!("j3({which})")) && c.status.passed()));
        assert!(rec
            .certificates
            .iter()
            .any(|c| c.name.contains(&format!("separates lambda from {which}"))
                && c.status.passed()));
    }
    println!("[PASS] criterion 6: j3 separates lambda from both companions; the invariant 5-tuple distinguishes the fiber");
}

#[test]
fn criterion_07_exceptional_points() {
    let klein = klein_automorphism_check().unwrap();
    assert!(klein.all_passed(), "{klein}");
    // moduli field: Q on the exceptional set, Q(lambda) off it
    let m = kft_moduli_field(&AlgValue::Quadratic(klein_point())).unwrap();
    assert_eq!(m.descriptor, "Q");
    let m = kft_moduli_field(&AlgValue::Rational(Rat::zero())).unwrap();
    assert_eq!(m.descriptor, "Q");
    let m = kft_moduli_field(&AlgValue::Rational(Rat::new(1, 3).unwrap())).unwrap();
    assert_eq!(m.descriptor, "Q");
    let lam = QuadNumber::new(Rat::one(), Rat::one(), 2).unwrap();
    let m = kft_moduli_field(&AlgValue::Quadratic(lam)).unwrap();
    assert_eq!(m.descriptor, "Q(sqrt(2))");
    assert_eq!(m.min_poly.as_deref(), Some("X^2-2*X-1"));
    // the Klein pair is one conformal class
    let d = kft_equivalent(
        &AlgValue::Quadratic(klein_point()),
        &AlgValue::Quadratic(klein_point().conj()),
    )
    .unwrap();
    assert!(d.conformal);
    println!("[PASS] criterion 7: Klein automorphism of projective order 7 preserves the member; moduli field Q on the exceptional set, Q(lambda) off it");
}

/// The committed brute-force fixture for the S4 census.
#[derive(serde::Deserialize)]
struct CensusFixture {
    raw_vector_count: usize,
    class_count: usize,
    move_orbit_sizes: Vec<usize>,
    normalized_solutions: Vec<Vec<Vec<usize>>>,
    class_representatives: Vec<Vec<Vec<usize>>>,
}

fn vector_from_fixture(rows: &[Vec<usize>]) -> GenVector {
    let tuple: Vec<Perm> = rows
        .iter()
        .map(|r| Perm::from_one_indexed(r).unwrap())
        .collect();
    GenVector::new(vec![2, 2, 2, 3], tuple).unwrap()
}

#[test]
fn criterion_08_group_census() {
    let signature = sig(&[2, 2, 2, 3]);

    // the presentation-normalized census reproduces the three catalogued solutions
    let (a, b) = s4_standard_generators();
    let asg = BTreeMap::from([('A', a), ('B', b)]);
    let w = |s: &str| word_eval(s, &asg, 4).unwrap();
    let x3 = w("A^2");
    let expected: Vec<GenVector> = [("B", "ABA^-1"), ("ABA^-1", "(BA)B(BA)^-1"), ("(BA)B(BA)^-1", "B")]
        .iter()
        .map(|(w1, w2)| {
            let t1 = w(w1);
            let t2 = w(w2);
            let t4 = t1.compose(&t2).compose(&x3).inverse();
            GenVector::new(vec![2, 2, 2, 3], vec![t1, t2, x3.clone(), t4]).unwrap()
        })
        .collect();
    let mut got = enumerate_smooth_epis(&signature, 4, CensusMode::NormalizedS4).unwrap();
    let mut want = expected.clone();
    got.sort();
    want.sort();
    assert_eq!(got, want, "normalized census = the three catalogued solutions");

    // moves: Y sends solution (1) to (2) and Z sends it to (3), verbatim
    assert_eq!(
        hurwitz_move(&expected[0], HurwitzMove::Y).unwrap(),
        expected[1]
    );
    assert_eq!(
        hurwitz_move(&expected[0], HurwitzMove::Z).unwrap(),
        expected[2]
    );

    // all classes lie in one move-orbit
    let orbits = classes_connected(&expected).unwrap();
    assert_eq!(orbits.len(), 1);
    assert_eq!(orbits[0], vec![0, 1, 2]);

    // unnormalized class count pinned by the committed brute-force oracle
    let fixture: CensusFixture = serde_json::from_str(include_str!(
        "fixtures/census_0_2223_s4.json"
    ))
    .unwrap();
    let classes = enumerate_smooth_epis(&signature, 4, CensusMode::UpToConjugation).unwrap();
    assert_eq!(classes.len(), fixture.class_count);
    assert_eq!(fixture.raw_vector_count, 216);
    let fixture_classes: Vec<GenVector> = fixture
        .class_representatives
        .iter()
        .map(|rows| vector_from_fixture(rows))
        .collect();
    for (ours, theirs) in classes.iter().zip(&fixture_classes) {
        assert_eq!(ours.tuple(), theirs.tuple(), "canonical representatives match the oracle");
    }
    let fixture_normalized: Vec<GenVector> = fixture
        .normalized_solutions
        .iter()
        .map(|rows| vector_from_fixture(rows))
        .collect();
    assert_eq!(got, fixture_normalized);
    // the full-census orbit partition matches the oracle as well
    let orbits = classes_connected(&classes).unwrap();
    let mut sizes: Vec<usize> = orbits.iter().map(Vec::len).collect();
    sizes.sort_unstable();
    assert_eq!(sizes, fixture.move_orbit_sizes);
    println!("[PASS] criterion 8: census verbatim, Y: (1)->(2), Z: (1)->(3), one orbit; unnormalized count {} pinned by the fixture", fixture.class_count);
}

#[test]
fn criterion_09_homology_certificates() {
    let rec = legendre_cover_check().unwrap();
    assert!(rec.all_passed(), "{rec}");
    // b2^2 holds strictly
    let b2sq = rec
        .certificates
        .iter()
        .find(|c| c.name == "b2^2 = identity")
        .expect("certificate present");
    assert_eq!(b2sq.status, CertStatus::PassStrict);
    // the perfect-square fiber extractions are present and pass
    for name in [
        "numerator = lambda * (w^2 - 2w + lambda)^2",
        "denominator = (w^2 - 2 lambda w + lambda)^2",
        "numerator - denominator = (lambda - 1)(w^2 - lambda)^2",
    ] {
        assert!(rec
            .certificates
            .iter()
            .any(|c| c.name == name && c.status.passed()));
    }
    assert!(rec
        .certificates
        .iter()
        .any(|c| c.name.contains("Q(infinity) = Q(0) = Q(1) = Q(lambda) = lambda")
            && c.status.passed()));
    assert_eq!(homology_genus(2).unwrap(), 1);
    println!("[PASS] criterion 9: Legendre cover bundle (preservation, involutions, commutation, deck invariance, cone values, fiber squares); genus(2) = 1");
}

#[test]
fn criterion_10_j_machinery() {
    let lam = RatFunc::var();
    let j = j_invariant(&lam).unwrap();
    for m in anharmonic_orbit(&lam).unwrap() {
        assert_eq!(j_invariant(&m).unwrap(), j, "j constant at {m}");
    }
    let orbit = anharmonic_orbit(&Rat::from_int(-1)).unwrap();
    assert_eq!(orbit.len(), 3);
    for v in [Rat::from_int(-1), Rat::from_int(2), Rat::new(1, 2).unwrap()] {
        assert!(orbit.contains(&v));
        assert_eq!(j_invariant(&v).unwrap(), Rat::new(27, 4).unwrap());
    }
    let rep = homology_moduli_report(&Rat::from_int(-1), &|j| classify_rational(j)).unwrap();
    assert_eq!(rep.descriptor, "Q");
    assert_eq!(rep.j, Rat::new(27, 4).unwrap());
    println!("[PASS] criterion 10: j invariant under the anharmonic six; orbit of -1 is {{-1, 2, 1/2}} with j = 27/4; moduli report Q");
}

// ---- criterion 11: CLI golden files and the exit-code contract ----

fn run_cli(args: &[&str]) -> (String, i32) {
    let out = Command::new(env!("CARGO_BIN_EXE_moduli-forge"))
        .args(args)
        .env("MODULI_FORGE_THREADS", "2")
        .output()
        .expect("binary runs");
    (
        String::from_utf8(out.stdout).expect("utf8 output"),
        out.status.code().expect("exit code"),
    )
}

/// Zeroes the timing field, which is isolated in its own key.
fn normalize_timing(json: &str) -> String {
    let mut v: serde_json::Value = serde_json::from_str(json).expect("valid JSON");
    v["elapsed_ms"] = serde_json::Value::from(0u64);
    let mut s = serde_json::to_string_pretty(&v).expect("serializes");
    s.push('\n');
    s
}

#[test]
fn criterion_11_cli_golden_files() {
    let cases: [(&str, &[&str], i32); 3] = [
        (
            "classify_0_2223.json",
            &["classify", "--signature", "0,2,2,2,3"],
            0,
        ),
        (
            "kft_invariants_minus_5_2.json",
            &["kft", "invariants", "--lambda", "-5/2"],
            0,
        ),
        (
            "groups_census_normalized.json",
            &["groups", "census", "--signature", "0,2,2,2,3", "--sym", "4", "--normalized"],
            0,
        ),
    ];
    for (golden_name, args, want_code) in cases {
        let (out1, code1) = run_cli(args);
        let (out2, code2) = run_cli(args);
        assert_eq!(code1, want_code, "exit code of {args:?}");
        assert_eq!(code2, want_code);
        let n1 = normalize_timing(&out1);
        let n2 = normalize_timing(&out2);
        assert_eq!(n1, n2, "byte-stable output for {args:?}");
        let golden_path = format!("{}/tests/golden/{golden_name}", env!("CARGO_MANIFEST_DIR"));
        let golden = std::fs::read_to_string(&golden_path)
            .unwrap_or_else(|e| panic!("golden file {golden_path}: {e}"));
        assert_eq!(n1, normalize_timing(&golden), "golden mismatch for {args:?}");
    }

    // spot checks on the content
    let (out, _) = run_cli(&["kft", "invariants", "--lambda", "-5/2"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["verdicts"]["G"], "4");
    assert_eq!(v["schema"], 1);
    let (out, _) = run_cli(&["classify", "--signature", "0,2,2,2,3"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["verdicts"]["case"], "CASE1");
    let (out, _) = run_cli(&[
        "groups", "census", "--signature", "0,2,2,2,3", "--sym", "4", "--normalized",
    ]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["verdicts"]["count"], "3");

    // exit-code contract
    let (_, code) = run_cli(&["classify", "--signature", "0,3,3,3,3,3"]);
    assert_eq!(code, 1, "unclassified signature is a negative verdict");
    let (_, code) = run_cli(&["kft", "equivalent", "--lambda1", "1/3", "--lambda2", "1/4"]);
    assert_eq!(code, 1, "not equivalent is a negative verdict");
    let (_, code) = run_cli(&["jfun", "--lambda", "1"]);
    assert_eq!(code, 2, "branch value is an input error");
    let (_, code) = run_cli(&["jfun", "--lambda", "1+"]);
    assert_eq!(code, 2, "syntax error is an input error");
    let (_, code) = run_cli(&["no-such-command"]);
    assert_eq!(code, 2, "unknown subcommand is an input error");
    let (_, code) = run_cli(&["kft", "certify"]);
    assert_eq!(code, 0, "full battery certifies");
    println!("[PASS] criterion 11: golden JSON byte-stable (timing isolated); exit-code contract 0/1/2 honored");
}
