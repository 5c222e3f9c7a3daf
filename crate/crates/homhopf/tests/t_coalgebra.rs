mod common;

use common::*;

use homhopf::crossed::drinfeld_double;
use homhopf::tcoalg::*;
use homhopf::yd::*;

#[test]
fn mhd_single_component_is_double() {
    let h = h4(2);
    let mhd = build_mhd(&h, &[]).unwrap();
    assert_eq!(mhd.t.index_set.len(), 1);
    let dd = drinfeld_double(&h).unwrap();
    let e = mhd.t.unit_index().unwrap();
    assert_eq!(mhd.t.components[e].mult, dd.hopf.mult);
    assert_eq!(mhd.t.comult(e, e).unwrap(), &dd.hopf.comult);
    assert_eq!(mhd.t.counit, dd.hopf.counit);
    assert_eq!(mhd.t.antipode(e).unwrap(), &dd.hopf.antipode);
    assert_eq!(mhd.t.components[e].xi, dd.hopf.xi);
    assert_eq!(mhd.t.components[e].unit, dd.hopf.unit);
}

#[test]
fn mhd_three_components_checks() {
    let h = h4(2);
    let p = pair(&h, 2, 3);
    let pinv = group_inv(&p);
    let mhd = build_mhd(&h, &[p.clone(), pinv.clone()]).unwrap();
    assert_eq!(mhd.t.index_set.len(), 3);

    let rep = check_t_coalgebra(&mhd.t);
    println!("t-coalgebra:");
    for c in &rep.checks {
        if !c.passed {
            println!("  FAIL {}", c.id);
            if let Some(ce) = &c.counterexample {
                println!("      {}", ce);
            }
        }
    }
    for n in &rep.info {
        println!("  note {}", n);
    }
    assert!(rep.all_passed(), "{:?}", rep.failed_ids());

    let rep = check_crossing(&mhd.t);
    println!("crossing:");
    for c in &rep.checks {
        if !c.passed {
            println!("  FAIL {}", c.id);
        }
    }
    assert!(rep.all_passed(), "{:?}", rep.failed_ids());
}

#[test]
fn mhd_requires_inverse_closure() {
    let h = h4(2);
    let p = pair(&h, 2, 3);
    assert!(build_mhd(&h, &[p]).is_err());
}

#[test]
fn mutated_component_twist_fails() {
    // single component: only the unit-twist laws can see the mutation
    let h = h4(2);
    let mhd = build_mhd(&h, &[]).unwrap();
    let mut t = mhd.t.clone();
    t.components[0].xi = homhopf::mat::LinMap::identity(16);
    let rep = check_t_coalgebra(&t);
    assert!(!rep.all_passed());
    assert!(rep.failed_ids().iter().any(|id| id.contains("unit")));

    // with more components the twist compatibility of the partial
    // comultiplications catches it, with a counterexample
    let p = pair(&h, 2, 3);
    let mhd3 = build_mhd(&h, &[p.clone(), group_inv(&p)]).unwrap();
    let mut t3 = mhd3.t.clone();
    let e = t3.unit_index().unwrap();
    t3.components[e].xi = homhopf::mat::LinMap::identity(16);
    let rep3 = check_t_coalgebra(&t3);
    let xi_rows: Vec<&str> = rep3
        .failed_ids()
        .into_iter()
        .filter(|id| id.starts_with("t/comult-xi"))
        .collect();
    assert!(!xi_rows.is_empty(), "{:?}", rep3.failed_ids());
    let row = rep3.check(xi_rows[0]).unwrap();
    assert!(row.counterexample.is_some());
}

#[test]
fn transport_round_trip() {
    let h = h4(2);
    let p = pair(&h, 2, 3);
    let pinv = group_inv(&p);
    let mhd = build_mhd(&h, &[p.clone(), pinv]).unwrap();

    for q in [AutPair::unit(h.clone()), p] {
        let m = canonical_yd(&q);
        let module = mhd.rep_transport(&m).unwrap();
        let rep = homhopf::rep::check_module(&module);
        assert!(rep.all_passed(), "{:?}", rep.failed_ids());
        let back = mhd.rep_transport_inverse(&q, &module).unwrap();
        assert_eq!(back.action, m.action);
        assert_eq!(back.coaction, m.coaction);
        assert_eq!(back.pair, m.pair);
    }
}

#[test]
fn transport_of_trivial_module() {
    let h = h4(2);
    let mhd = build_mhd(&h, &[]).unwrap();
    let t = trivial_yd(h.clone());
    let module = mhd.rep_transport(&t).unwrap();
    // (f |><| h) acts by eps(h) f(1) xi_M on the trivial module
    let e = mhd.t.unit_index().unwrap();
    let expected = homhopf::multilinear::MultilinearMap::functional(16, &mhd.t.counit)
        .tensor(&t.xi_map(1))
        .regroup(vec![16, 1], vec![1]);
    assert_eq!(module.action.as_lin(), expected.as_lin());
    let _ = e;
}
