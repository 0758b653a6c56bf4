use super::*;
use crate::builtins::{self, Built};
use crate::commuting::{semidirect_families, vm_families, Strategy};
use crate::exactla::{vector, Matrix, PrimeField, Rationals};

fn q(v: &[i64]) -> Vec<num_rational::BigRational> {
    vector::from_i64s(&Rationals, v)
}

fn gf(p: u64) -> PrimeField {
    PrimeField::new(p).unwrap()
}

fn exhaustive() -> SamplerConfig {
    SamplerConfig { exhaustive: true, ..Default::default() }
}

fn fams(s: &str) -> FamilySet<Rationals> {
    FamilySet::for_builtin(&s.parse().unwrap(), &Rationals).unwrap()
}

#[test]
fn mprime_dimensions() {
    assert_eq!(mprime(&builtins::sl2()).dim(), 0);
    assert_eq!(mprime(&builtins::heisenberg(1).unwrap()).dim(), 2);
    assert_eq!(mprime(&builtins::age1()).dim(), 3);
    assert_eq!(mv(&builtins::vm_module(3)).dim(), 8);
}

#[test]
fn kprime_span_examples() {
    let ab = crate::LieAlgebra::abelian(&Rationals, 4);
    let (span, _) = kprime_span(&ab, &SamplerConfig::default(), FamilySet::default()).unwrap();
    assert!(span.is_full());

    let h3 = builtins::heisenberg(1).unwrap();
    let cfg = SamplerConfig { strategies: vec![Strategy::Basis], ..Default::default() };
    let (span, pairs) = kprime_span(&h3, &cfg, FamilySet::default()).unwrap();
    assert_eq!(span.dim(), 2);
    let parts: Vec<_> = pairs.into_iter().map(|p| p.into_parts()).collect();
    assert_eq!(parts, vec![(q(&[1, 0, 0]), q(&[0, 1, 0])), (q(&[1, 0, 0]), q(&[0, 0, 1]))]);
}

#[test]
fn sl2_is_certified_with_empty_certificate() {
    let r = decide_zpd(&builtins::sl2(), &SamplerConfig::default(), FamilySet::default()).unwrap();
    assert_eq!(r.verdict, Verdict::ZpdCertified);
    assert_eq!(r.certificate, Some(vec![]));
    assert_eq!(r.dims.m_prime, 0);
    assert_eq!(r.dims.derived, 3);
}

#[test]
fn heisenberg_algebras_are_certified() {
    for k in 1..=4 {
        let h = builtins::heisenberg(k).unwrap();
        let r = decide_zpd(&h, &SamplerConfig::default(), fams(&format!("heisenberg:{k}"))).unwrap();
        assert_eq!(r.verdict, Verdict::ZpdCertified, "k={k}");
        let m = (2 * k + 1) * k - 1;
        assert_eq!((r.dims.m_prime, r.dims.k_prime), (m, m));
    }
}

#[test]
fn age1_negative_over_both_fields() {
    let a5 = builtins::age1().to_field(&gf(5)).unwrap();
    let r = decide_zpd(&a5, &exhaustive(), FamilySet::default()).unwrap();
    assert_eq!(r.verdict, Verdict::NotZpdExhaustive);
    assert_eq!((r.dims.m_prime, r.dims.k_prime), (3, 2));

    let r = decide_zpd(&builtins::age1(), &SamplerConfig::default(), fams("age1")).unwrap();
    assert_eq!(r.verdict, Verdict::NotZpdProbabilistic);
    assert!(r.witness.unwrap().validation >= 200);
}

#[test]
fn zad_examples() {
    let cfg = SamplerConfig::default();
    let r = decide_zad(&builtins::vm_module(1), &cfg, fams("vm:1")).unwrap();
    assert_eq!(r.verdict, Verdict::ZadCertified);
    assert_eq!((r.dims.m_v, r.dims.k_v), (4, 4));

    let r = decide_zad(&builtins::vm_module(3), &cfg, fams("vm:3")).unwrap();
    assert_eq!(r.verdict, Verdict::NotZadProbabilistic);
    assert_eq!((r.dims.m_v, r.dims.k_v), (8, 6));

    let r = decide_zad(&builtins::bvm_module(4), &cfg, fams("bvm:4")).unwrap();
    assert!(r.verdict.is_negative());
    assert_eq!((r.dims.m_v, r.dims.k_v, r.dims.lv), (5, 4, 5));
}

#[test]
fn witness_extraction() {
    let ab = crate::LieAlgebra::abelian(&Rationals, 3);
    let m = mprime(&ab);
    assert!(extract_witness(&m, &m).is_none());

    let g = builtins::galilei(3);
    let arena = Arena::Lie(&g);
    let acc = accumulate(arena, &SamplerConfig::default(), fams("galilei:3").families).unwrap();
    let (xi, mu) = extract_witness(&acc.span, &acc.target).unwrap();
    assert!(!Rationals.is_zero(&vector::dot(&Rationals, &xi, &mu)));
    // the functional is blind to every structured family across the grid
    for fam in semidirect_families(3, 4, &[], &vm_families(3)) {
        for k in -4..=4 {
            let (x, y) = fam.eval(&Rationals, &Rationals.from_i64(k));
            let w = arena.coords(&x, &y).unwrap();
            assert!(Rationals.is_zero(&vector::dot(&Rationals, &xi, &w)));
        }
    }
}

#[test]
fn certificates_replay() {
    let h3 = builtins::heisenberg(1).unwrap();
    let arena = Arena::Lie(&h3);
    let r = decide_zpd(&h3, &SamplerConfig::default(), FamilySet::default()).unwrap();
    let cert = r.certificate.unwrap();
    assert!(verify_certificate(&arena, &cert).ok);

    let mut bad = cert.clone();
    bad[0].x = vec!["0".into(), "0".into(), "1".into()];
    let v = verify_certificate(&arena, &bad);
    assert!(!v.ok);
    assert!(v.diagnosis.unwrap().contains("does not annihilate"));

    assert!(!verify_certificate(&arena, &cert[..1]).ok);
    let sl2 = builtins::sl2();
    assert!(verify_certificate(&Arena::Lie(&sl2), &[]).ok);
}

#[test]
fn reports_round_trip_through_json() {
    let reports = [
        serde_json::to_string(&decide_zpd(&builtins::heisenberg(2).unwrap(), &SamplerConfig::default(), fams("heisenberg:2")).unwrap()).unwrap(),
        serde_json::to_string(&decide_zpd(&builtins::age1(), &SamplerConfig::default(), fams("age1")).unwrap()).unwrap(),
        serde_json::to_string(&decide_zad(&builtins::vm_module(3), &SamplerConfig::default(), fams("vm:3")).unwrap()).unwrap(),
        serde_json::to_string(&decide_zpd(&builtins::bm_algebra(3).to_field(&gf(5)).unwrap(), &exhaustive(), FamilySet::default()).unwrap()).unwrap(),
    ];
    for json in &reports {
        assert!(verify_report(json).unwrap().ok, "{json}");
    }
    // tampering with the recorded functional breaks the witness
    let mut v: serde_json::Value = serde_json::from_str(&reports[1]).unwrap();
    let xi = v["witness"]["xi"].as_array_mut().unwrap();
    let k = xi.iter().position(|s| s != "0").unwrap();
    xi[k] = "7".into();
    assert!(!verify_report(&v.to_string()).unwrap().ok);
    // and so does a lie about the dimensions
    let mut v: serde_json::Value = serde_json::from_str(&reports[0]).unwrap();
    v["dims"]["M_prime"] = 3.into();
    assert!(!verify_report(&v.to_string()).unwrap().ok);
    assert!(verify_report("{\"nothing\": 1}").is_err());
}

#[test]
fn proportionality() {
    let f5 = gf(5);
    let r = is_proportional_commuting(&builtins::sl2().to_field(&f5).unwrap(), &exhaustive()).unwrap();
    assert_eq!(r.verdict, Proportionality::TrueExhaustive);
    let r = is_proportional_commuting(&builtins::borel().to_field(&f5).unwrap(), &exhaustive()).unwrap();
    assert_eq!(r.verdict, Proportionality::TrueExhaustive);

    let h3 = builtins::heisenberg(1).unwrap();
    let r = is_proportional_commuting(&h3, &SamplerConfig::default()).unwrap();
    assert_eq!(r.verdict, Proportionality::False);
    let (x, y) = r.counterexample.unwrap().parse(&Rationals).unwrap();
    assert_eq!((x, y), (q(&[1, 0, 0]), q(&[0, 1, 0])));
    let r = is_proportional_commuting(&builtins::sl2(), &SamplerConfig::default()).unwrap();
    assert_eq!(r.verdict, Proportionality::TrueProbabilistic);
}

#[test]
fn commutativity_preservers() {
    let sl2 = builtins::sl2();
    let cfg = SamplerConfig::default();
    let id = Matrix::identity(&Rationals, 3);
    let r = check_comm_preserving(&id, &sl2, &sl2, &cfg, vec![]).unwrap();
    assert_eq!(r.verdict, PreserveVerdict::PreservesSampled);

    let any = Matrix::from_rows(&Rationals, 3, vec![q(&[1, 2, 0]), q(&[-3, 0, 5]), q(&[0, 7, 1])]).unwrap();
    assert_eq!(check_comm_preserving(&any, &sl2, &sl2, &cfg, vec![]).unwrap().verdict, PreserveVerdict::PreservesSampled);

    // c ↦ E, x₁ ↦ H, x₋₁ ↦ F
    let h3 = builtins::heisenberg(1).unwrap();
    let r = check_comm_preserving(&id, &h3, &sl2, &cfg, vec![]).unwrap();
    assert_eq!(r.verdict, PreserveVerdict::Violation);
    let (x, y) = r.counterexample.unwrap().parse(&Rationals).unwrap();
    assert_eq!((x, y), (q(&[1, 0, 0]), q(&[0, 1, 0])));

    let wrong = Matrix::identity(&Rationals, 2);
    assert!(check_comm_preserving(&wrong, &h3, &sl2, &cfg, vec![]).is_err());
}

#[test]
fn characteristic_two_is_refused() {
    let l = builtins::heisenberg(1).unwrap().to_field(&gf(2)).unwrap();
    assert!(matches!(
        decide_zpd(&l, &SamplerConfig::default(), FamilySet::default()),
        Err(Error::UnsupportedCharacteristic(2, _))
    ));
}

#[test]
fn same_seed_same_report() {
    let cfg = SamplerConfig { seed: 42, ..Default::default() };
    let a = serde_json::to_string(&decide_zpd(&builtins::galilei(3), &cfg, fams("galilei:3")).unwrap()).unwrap();
    let b = serde_json::to_string(&decide_zpd(&builtins::galilei(3), &cfg, fams("galilei:3")).unwrap()).unwrap();
    assert_eq!(a, b);
}

#[test]
fn modules_of_builtins_decide_through_the_enum() {
    let Built::Module(m) = "bvm:2".parse::<crate::builtins::BuiltinRef>().unwrap().build().unwrap() else {
        panic!("bvm is a module")
    };
    let r = decide_zad(&m, &SamplerConfig::default(), fams("bvm:2")).unwrap();
    assert_eq!(r.verdict, Verdict::ZadCertified);
    assert_eq!(r.dims.k_v, 3);
}
