//! Hom-modules, Hom-comodules, bimodules and bicomodule algebras, with
//! exhaustive axiom checkers.
//!
//! Left and right structures are kept as separate tensors rather than being
//! routed through opposite algebras; the compatibility conditions in this
//! theory mix left actions with right coactions and the explicit tensors keep
//! the leg order honest.

use crate::hopf::{HomAlgebra, HomCoalgebra, HomHopfAlgebra};
use crate::mat::LinMap;
use crate::multilinear::MultilinearMap;
use crate::report::AxiomReport;

/// Left Hom-module over a monoidal Hom-algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomModule {
    pub algebra: HomAlgebra,
    pub dim: usize,
    pub xi: LinMap,
    /// Action `A (x) M -> M`.
    pub action: MultilinearMap,
}

impl HomModule {
    pub fn new(algebra: HomAlgebra, dim: usize, xi: LinMap, action: MultilinearMap) -> Self {
        assert_eq!(action.ins(), [algebra.dim, dim], "action shape");
        assert_eq!(action.outs(), [dim], "action output shape");
        HomModule { algebra, dim, xi, action }
    }

    pub fn xi_map(&self, k: i64) -> MultilinearMap {
        MultilinearMap::from_lin(&self.xi.pow(k).expect("module twist is invertible"))
    }

    pub fn id_map(&self) -> MultilinearMap {
        MultilinearMap::identity(&[self.dim])
    }
}

/// Right Hom-comodule over a monoidal Hom-coalgebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomComodule {
    pub coalgebra: HomCoalgebra,
    pub dim: usize,
    pub xi: LinMap,
    /// Coaction `M -> M (x) C`.
    pub coaction: MultilinearMap,
}

impl HomComodule {
    pub fn new(coalgebra: HomCoalgebra, dim: usize, xi: LinMap, coaction: MultilinearMap) -> Self {
        assert_eq!(coaction.ins(), [dim], "coaction shape");
        assert_eq!(coaction.outs(), [dim, coalgebra.dim], "coaction output shape");
        HomComodule { coalgebra, dim, xi, coaction }
    }

    pub fn xi_map(&self, k: i64) -> MultilinearMap {
        MultilinearMap::from_lin(&self.xi.pow(k).expect("comodule twist is invertible"))
    }
}

/// Two-sided Hom-module data.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomBimodule {
    pub algebra: HomAlgebra,
    pub dim: usize,
    pub xi: LinMap,
    /// Left action `A (x) M -> M`.
    pub left: MultilinearMap,
    /// Right action `M (x) A -> M`.
    pub right: MultilinearMap,
}

/// Hom-algebra with compatible left and right coactions of a monoidal
/// Hom-Hopf algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BicomoduleAlgebra {
    pub hopf: HomHopfAlgebra,
    pub algebra: HomAlgebra,
    /// `rho_l : A -> H (x) A`.
    pub rho_l: MultilinearMap,
    /// `rho_r : A -> A (x) H`.
    pub rho_r: MultilinearMap,
}

impl BicomoduleAlgebra {
    pub fn new(
        hopf: HomHopfAlgebra,
        algebra: HomAlgebra,
        rho_l: MultilinearMap,
        rho_r: MultilinearMap,
    ) -> Self {
        assert_eq!(rho_l.ins(), [algebra.dim]);
        assert_eq!(rho_l.outs(), [hopf.dim, algebra.dim], "left coaction lands in H (x) A");
        assert_eq!(rho_r.ins(), [algebra.dim]);
        assert_eq!(rho_r.outs(), [algebra.dim, hopf.dim], "right coaction lands in A (x) H");
        BicomoduleAlgebra { hopf, algebra, rho_l, rho_r }
    }

    /// The regular bicomodule structure on `H` itself: both coactions are the
    /// comultiplication.
    pub fn regular(h: &HomHopfAlgebra) -> Self {
        BicomoduleAlgebra::new(h.clone(), h.algebra(), h.comult.clone(), h.comult.clone())
    }
}

/// Verifies the left Hom-module laws exhaustively.
pub fn check_module(m: &HomModule) -> AxiomReport {
    let mut report = AxiomReport::new();
    let a = &m.algebra;
    let psi = &m.action;
    let xi_a = a.xi_map(1);
    let xi_m = m.xi_map(1);
    let id_m = m.id_map();

    // xi_A(a) . (b . m) = (ab) . xi_M(m)
    report.require_map_eq(
        "module/hom-associative",
        &xi_a.tensor(psi).then(psi),
        &a.mult.tensor(&xi_m).then(psi),
    );
    // xi_M(a . m) = xi_A(a) . xi_M(m)
    report.require_map_eq("module/xi-equivariant", &psi.then(&xi_m), &xi_a.tensor(&xi_m).then(psi));
    // 1 . m = xi_M(m)
    report.require_map_eq("module/unit", &a.unit_map().tensor(&id_m).then(psi), &xi_m);
    report
}

/// Verifies the right Hom-comodule laws exhaustively.
pub fn check_comodule(m: &HomComodule) -> AxiomReport {
    let mut report = AxiomReport::new();
    let c = &m.coalgebra;
    let rho = &m.coaction;
    let xi_c = MultilinearMap::from_lin(&c.xi);
    let xi_c_inv = MultilinearMap::from_lin(&c.xi.inverse().expect("twist invertible"));
    let xi_m = m.xi_map(1);
    let xi_m_inv = m.xi_map(-1);
    let id_m = MultilinearMap::identity(&[m.dim]);

    // xi_M^{-1}(m0) (x) Delta(m1) = (m00 (x) m01) (x) xi_C^{-1}(m1)
    report.require_map_eq(
        "comodule/hom-coassociative",
        &rho.then(&xi_m_inv.tensor(&c.comult)),
        &rho.then(&rho.tensor(&xi_c_inv)),
    );
    // rho(xi_M(m)) = xi_M(m0) (x) xi_C(m1)
    report.require_map_eq("comodule/xi-equivariant", &xi_m.then(rho), &rho.then(&xi_m.tensor(&xi_c)));
    // m0 eps(m1) = xi_M^{-1}(m)
    report.require_map_eq(
        "comodule/counit",
        &rho.then(&id_m.tensor(&c.counit_map())),
        &xi_m_inv,
    );
    report
}

/// Verifies left-module, right-module and two-sided compatibility laws.
pub fn check_bimodule(b: &HomBimodule) -> AxiomReport {
    let mut report = AxiomReport::new();
    let a = &b.algebra;
    let xi_a = a.xi_map(1);
    let xi_m = MultilinearMap::from_lin(&b.xi.pow(1).expect("invertible"));
    let id_m = MultilinearMap::identity(&[b.dim]);
    let l = &b.left;
    let r = &b.right;

    report.require_map_eq(
        "bimodule/left-hom-associative",
        &xi_a.tensor(l).then(l),
        &a.mult.tensor(&xi_m).then(l),
    );
    report.require_map_eq("bimodule/left-xi-equivariant", &l.then(&xi_m), &xi_a.tensor(&xi_m).then(l));
    report.require_map_eq("bimodule/left-unit", &a.unit_map().tensor(&id_m).then(l), &xi_m);

    // (m . a) . xi_A(b) = xi_M(m) . (ab)
    report.require_map_eq(
        "bimodule/right-hom-associative",
        &r.tensor(&xi_a).then(r),
        &xi_m.tensor(&a.mult).then(r),
    );
    report.require_map_eq("bimodule/right-xi-equivariant", &r.then(&xi_m), &xi_m.tensor(&xi_a).then(r));
    report.require_map_eq("bimodule/right-unit", &id_m.tensor(&a.unit_map()).then(r), &xi_m);

    // xi_A(a) . (m . b) = (a . m) . xi_A(b)
    report.require_map_eq(
        "bimodule/compatibility",
        &xi_a.tensor(r).then(l),
        &l.tensor(&xi_a).then(r),
    );
    report
}

/// Left Hom-comodule laws for a coaction `rho_l : A -> H (x) A` (the mirror
/// of the displayed right-comodule laws).
fn check_left_comodule_laws(
    report: &mut AxiomReport,
    prefix: &str,
    h: &HomHopfAlgebra,
    dim: usize,
    xi: &LinMap,
    rho_l: &MultilinearMap,
) {
    let xi_h = h.xi_map(1);
    let xi_h_inv = h.xi_map(-1);
    let xi_m = MultilinearMap::from_lin(xi);
    let xi_m_inv = MultilinearMap::from_lin(&xi.inverse().expect("twist invertible"));
    let id_m = MultilinearMap::identity(&[dim]);

    // Delta(a_{[-1]}) (x) xi_A^{-1}(a_{[0]}) = xi_H^{-1}(a_{[-1]}) (x) rho_l(a_{[0]})
    report.require_map_eq(
        &format!("{prefix}/hom-coassociative"),
        &rho_l.then(&h.comult.tensor(&xi_m_inv)),
        &rho_l.then(&xi_h_inv.tensor(rho_l)),
    );
    report.require_map_eq(
        &format!("{prefix}/xi-equivariant"),
        &xi_m.then(rho_l),
        &rho_l.then(&xi_h.tensor(&xi_m)),
    );
    // eps(a_{[-1]}) a_{[0]} = xi_A^{-1}(a)
    report.require_map_eq(
        &format!("{prefix}/counit"),
        &rho_l.then(&h.counit_map().tensor(&id_m)),
        &xi_m_inv,
    );
}

/// Verifies the bicomodule-algebra laws: both comodule structures, both
/// coactions multiplicative and unit-preserving, and the left-right
/// compatibility.
pub fn check_bicomodule_algebra(b: &BicomoduleAlgebra) -> AxiomReport {
    let mut report = AxiomReport::new();
    let h = &b.hopf;
    let a = &b.algebra;

    check_left_comodule_laws(&mut report, "bicomodule/left", h, a.dim, &a.xi, &b.rho_l);

    let right = HomComodule::new(h.coalgebra(), a.dim, a.xi.clone(), b.rho_r.clone());
    report.absorb("bicomodule/right-", check_comodule(&right));

    // rho_l is a Hom-algebra map into H (x) A
    let mid_l = MultilinearMap::permutation(&[h.dim, a.dim, h.dim, a.dim], &[0, 2, 1, 3]);
    report.require_map_eq(
        "bicomodule/rho_l-multiplicative",
        &a.mult.then(&b.rho_l),
        &b.rho_l
            .tensor(&b.rho_l)
            .then(&mid_l)
            .then_tensor_pair(&h.mult, &a.mult),
    );
    report.require_vec_eq(
        "bicomodule/rho_l-unit",
        &b.rho_l.apply(&a.unit),
        &h.unit_map().tensor(&a.unit_map()).eval_basis(&[]),
    );

    // rho_r is a Hom-algebra map into A (x) H
    let mid_r = MultilinearMap::permutation(&[a.dim, h.dim, a.dim, h.dim], &[0, 2, 1, 3]);
    report.require_map_eq(
        "bicomodule/rho_r-multiplicative",
        &a.mult.then(&b.rho_r),
        &b.rho_r
            .tensor(&b.rho_r)
            .then(&mid_r)
            .then_tensor_pair(&a.mult, &h.mult),
    );
    report.require_vec_eq(
        "bicomodule/rho_r-unit",
        &b.rho_r.apply(&a.unit),
        &a.unit_map().tensor(&h.unit_map()).eval_basis(&[]),
    );

    // a_{<0>[-1]} (x) a_{<0>[0]} (x) xi_H^{-1}(a_{<1>})
    //   = xi_H^{-1}(a_{[-1]}) (x) a_{[0]<0>} (x) a_{[0]<1>}
    let xi_h_inv = h.xi_map(-1);
    report.require_map_eq(
        "bicomodule/left-right-compatibility",
        &b.rho_r.then(&b.rho_l.tensor(&xi_h_inv)),
        &b.rho_l.then(&xi_h_inv.tensor(&b.rho_r)),
    );
    report
}
