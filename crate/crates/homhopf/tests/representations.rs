mod common;

use common::{h4, pair};
use homhopf::multilinear::MultilinearMap;
use homhopf::rep::*;
use homhopf::yd::alpha_beta_bicomodule;

#[test]
fn algebra_acts_on_itself() {
    let h = h4(2);
    let m = HomModule::new(h.algebra(), 4, h.xi.clone(), h.mult.clone());
    let rep = check_module(&m);
    assert!(rep.all_passed(), "{:?}", rep.failed_ids());
}

#[test]
fn canonical_conjugation_module() {
    // the carrier with the pair-labeled conjugation action is a module
    let h = h4(2);
    let p = pair(&h, 2, 3);
    let m = homhopf::yd::canonical_yd(&p).module();
    let rep = check_module(&m);
    assert!(rep.all_passed(), "{:?}", rep.failed_ids());
}

#[test]
fn unit_law_violation_is_localized() {
    // action with 1 . m = m but a nontrivial module twist fails exactly the
    // unit law
    let h = h4(2);
    let id_action = MultilinearMap::from_fn(vec![4, 4], vec![4], |out, idx| {
        // h . m = eps(h) m
        if out[0] == idx[1] {
            h.counit[idx[0]].clone()
        } else {
            homhopf::scalar::zero()
        }
    });
    let m = HomModule::new(h.algebra(), 4, h.xi.clone(), id_action);
    let rep = check_module(&m);
    assert!(!rep.passed("module/unit"));
    // the twist-equivariance law is untouched by this corruption
    assert!(rep.passed("module/xi-equivariant"));
    let ce = rep.check("module/unit").unwrap().counterexample.as_ref().unwrap().clone();
    // the counterexample re-evaluates to unequal sides
    assert_ne!(ce.lhs, ce.rhs);
}

#[test]
fn coalgebra_coacts_on_itself() {
    let h = h4(2);
    let co = HomComodule::new(h.coalgebra(), 4, h.xi.clone(), h.comult.clone());
    let rep = check_comodule(&co);
    assert!(rep.all_passed(), "{:?}", rep.failed_ids());
}

#[test]
fn zero_coaction_fails_counit_law() {
    let h = h4(2);
    let zero_coaction = MultilinearMap::from_fn(vec![4], vec![4, 4], |_, _| homhopf::scalar::zero());
    let co = HomComodule::new(h.coalgebra(), 4, h.xi.clone(), zero_coaction);
    let rep = check_comodule(&co);
    assert!(!rep.passed("comodule/counit"));
}

#[test]
fn two_sided_multiplication_bimodule() {
    let h = h4(2);
    let bi = HomBimodule {
        algebra: h.algebra(),
        dim: 4,
        xi: h.xi.clone(),
        left: h.mult.clone(),
        right: h.mult.clone(),
    };
    let rep = check_bimodule(&bi);
    assert!(rep.all_passed(), "{:?}", rep.failed_ids());
}

#[test]
fn trivial_left_action_breaks_bimodule_compatibility() {
    let h = h4(2);
    // h . m = eps(h) m without the module twist: not a Hom-module at all,
    // and the two-sided compatibility sees it
    let eps_left = MultilinearMap::from_fn(vec![4, 4], vec![4], |out, idx| {
        if out[0] == idx[1] {
            h.counit[idx[0]].clone()
        } else {
            homhopf::scalar::zero()
        }
    });
    let bi = HomBimodule {
        algebra: h.algebra(),
        dim: 4,
        xi: h.xi.clone(),
        left: eps_left,
        right: h.mult.clone(),
    };
    let rep = check_bimodule(&bi);
    assert!(!rep.passed("bimodule/compatibility"), "{:?}", rep.failed_ids());
}

#[test]
fn regular_bicomodule_algebra() {
    let h = h4(2);
    let reg = BicomoduleAlgebra::regular(&h);
    let rep = check_bicomodule_algebra(&reg);
    assert!(rep.all_passed(), "{:?}", rep.failed_ids());
}

#[test]
fn pair_labeled_bicomodule_algebra() {
    let h = h4(2);
    let p = pair(&h, 2, 3);
    let ab = alpha_beta_bicomodule(&p);
    let rep = check_bicomodule_algebra(&ab);
    assert!(rep.all_passed(), "{:?}", rep.failed_ids());
}

#[test]
fn swapped_left_coaction_fails_compatibility() {
    let h = h4(2);
    let p = pair(&h, 2, 3);
    let good = alpha_beta_bicomodule(&p);
    // feed the legs of rho_l in the wrong order
    let swapped = good
        .rho_l
        .then(&MultilinearMap::permutation(&[4, 4], &[1, 0]));
    let bad = BicomoduleAlgebra::new(h.as_ref().clone(), h.algebra(), swapped, good.rho_r.clone());
    let rep = check_bicomodule_algebra(&bad);
    assert!(!rep.passed("bicomodule/left-right-compatibility"));
}

#[test]
fn module_restriction_along_automorphism() {
    // restricting the action along a verified automorphism keeps the module
    // laws (the mechanism behind the label-shift functors)
    let h = h4(2);
    let p = pair(&h, 2, 3);
    let m = homhopf::yd::canonical_yd(&p);
    let phi = homhopf::registry::h4_automorphism(&h, &homhopf::scalar::int(5)).unwrap();
    let restricted = m.action.compose(&phi.map().tensor(&m.id_map()));
    let rm = HomModule::new(h.algebra(), 4, h.xi.clone(), restricted);
    let rep = check_module(&rm);
    assert!(rep.all_passed(), "{:?}", rep.failed_ids());
}
