//! Monoidal Hom-algebras, Hom-coalgebras and Hom-Hopf algebras by structure
//! constants, with exhaustive axiom checkers.
//!
//! All laws carry the twist: multiplicativity of the twist, twisted
//! associativity `xi(a)(bc) = (ab)xi(c)`, twisted units `a1 = 1a = xi(a)`, and
//! their coalgebra mirrors. A checker pass is a proof for the given
//! finite-dimensional structure since every identity is verified on all basis
//! tuples with exact arithmetic.

use std::sync::Arc;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::mat::{dualize, LinMap};
use crate::multilinear::{tensor_all, MultilinearMap};
use crate::report::AxiomReport;
use crate::scalar::Scalar;

/// Monoidal Hom-algebra `(A, xi, m, 1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomAlgebra {
    pub dim: usize,
    /// The twist `xi` (invertible; enforced at construction).
    pub xi: LinMap,
    /// Multiplication `m : A (x) A -> A`.
    pub mult: MultilinearMap,
    /// Unit element coefficients.
    pub unit: Vec<Scalar>,
}

impl HomAlgebra {
    pub fn new(dim: usize, xi: LinMap, mult: MultilinearMap, unit: Vec<Scalar>) -> Result<Self> {
        if xi.domain_dim() != dim || xi.codomain_dim() != dim {
            return Err(Error::DimMismatch("twist shape".into()));
        }
        if mult.ins() != [dim, dim] || mult.outs() != [dim] {
            return Err(Error::DimMismatch("multiplication shape".into()));
        }
        if unit.len() != dim {
            return Err(Error::DimMismatch("unit length".into()));
        }
        xi.inverse().map_err(|_| Error::Singular("twist is not invertible".into()))?;
        Ok(HomAlgebra { dim, xi, mult, unit })
    }

    pub fn xi_pow(&self, k: i64) -> LinMap {
        self.xi.pow(k).expect("twist invertibility is checked at construction")
    }

    pub fn xi_map(&self, k: i64) -> MultilinearMap {
        MultilinearMap::from_lin(&self.xi_pow(k))
    }

    pub fn unit_map(&self) -> MultilinearMap {
        MultilinearMap::constant(vec![self.dim], &self.unit)
    }

    pub fn id_map(&self) -> MultilinearMap {
        MultilinearMap::identity(&[self.dim])
    }

    /// Hom-product of two elements.
    pub fn product(&self, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        let mut v = Vec::with_capacity(self.dim * self.dim);
        for x in a {
            for y in b {
                v.push(x * y);
            }
        }
        self.mult.apply(&v)
    }
}

/// Monoidal Hom-coalgebra `(C, xi, Delta, eps)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomCoalgebra {
    pub dim: usize,
    pub xi: LinMap,
    /// Comultiplication `Delta : C -> C (x) C`.
    pub comult: MultilinearMap,
    /// Counit coefficients (a functional).
    pub counit: Vec<Scalar>,
}

impl HomCoalgebra {
    pub fn new(dim: usize, xi: LinMap, comult: MultilinearMap, counit: Vec<Scalar>) -> Result<Self> {
        if xi.domain_dim() != dim || xi.codomain_dim() != dim {
            return Err(Error::DimMismatch("twist shape".into()));
        }
        if comult.ins() != [dim] || comult.outs() != [dim, dim] {
            return Err(Error::DimMismatch("comultiplication shape".into()));
        }
        if counit.len() != dim {
            return Err(Error::DimMismatch("counit length".into()));
        }
        xi.inverse().map_err(|_| Error::Singular("twist is not invertible".into()))?;
        Ok(HomCoalgebra { dim, xi, comult, counit })
    }

    pub fn counit_map(&self) -> MultilinearMap {
        MultilinearMap::functional(self.dim, &self.counit)
    }
}

/// Monoidal Hom-Hopf algebra: one twist shared by the algebra and coalgebra
/// structure, plus an invertible antipode.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomHopfAlgebra {
    pub dim: usize,
    pub xi: LinMap,
    pub mult: MultilinearMap,
    pub unit: Vec<Scalar>,
    pub comult: MultilinearMap,
    pub counit: Vec<Scalar>,
    pub antipode: LinMap,
    /// Basis element names used by reports and serialization.
    pub basis: Vec<String>,
}

impl HomHopfAlgebra {
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        dim: usize,
        xi: LinMap,
        mult: MultilinearMap,
        unit: Vec<Scalar>,
        comult: MultilinearMap,
        counit: Vec<Scalar>,
        antipode: LinMap,
        basis: Vec<String>,
    ) -> Result<Self> {
        let algebra = HomAlgebra::new(dim, xi.clone(), mult, unit)?;
        let coalgebra = HomCoalgebra::new(dim, xi.clone(), comult, counit)?;
        if antipode.domain_dim() != dim || antipode.codomain_dim() != dim {
            return Err(Error::DimMismatch("antipode shape".into()));
        }
        antipode
            .inverse()
            .map_err(|_| Error::Singular("antipode is not invertible".into()))?;
        let basis = if basis.is_empty() {
            (0..dim).map(|i| format!("e{i}")).collect()
        } else if basis.len() == dim {
            basis
        } else {
            return Err(Error::DimMismatch("basis name count".into()));
        };
        Ok(HomHopfAlgebra {
            dim,
            xi,
            mult: algebra.mult,
            unit: algebra.unit,
            comult: coalgebra.comult,
            counit: coalgebra.counit,
            antipode,
            basis,
        })
    }

    pub fn algebra(&self) -> HomAlgebra {
        HomAlgebra {
            dim: self.dim,
            xi: self.xi.clone(),
            mult: self.mult.clone(),
            unit: self.unit.clone(),
        }
    }

    pub fn coalgebra(&self) -> HomCoalgebra {
        HomCoalgebra {
            dim: self.dim,
            xi: self.xi.clone(),
            comult: self.comult.clone(),
            counit: self.counit.clone(),
        }
    }

    pub fn xi_pow(&self, k: i64) -> LinMap {
        self.xi.pow(k).expect("twist is invertible")
    }

    pub fn antipode_pow(&self, k: i64) -> LinMap {
        self.antipode.pow(k).expect("antipode is invertible")
    }

    pub fn xi_map(&self, k: i64) -> MultilinearMap {
        MultilinearMap::from_lin(&self.xi_pow(k))
    }

    pub fn antipode_map(&self, k: i64) -> MultilinearMap {
        MultilinearMap::from_lin(&self.antipode_pow(k))
    }

    pub fn unit_map(&self) -> MultilinearMap {
        MultilinearMap::constant(vec![self.dim], &self.unit)
    }

    pub fn counit_map(&self) -> MultilinearMap {
        MultilinearMap::functional(self.dim, &self.counit)
    }

    pub fn id_map(&self) -> MultilinearMap {
        MultilinearMap::identity(&[self.dim])
    }

    pub fn product(&self, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        self.algebra().product(a, b)
    }
}

/// A verified automorphism of a monoidal Hom-Hopf algebra.
#[derive(Clone, Debug)]
pub struct HopfAutomorphism {
    pub carrier: Arc<HomHopfAlgebra>,
    pub matrix: LinMap,
    /// Cosmetic label used in reports; not part of equality.
    pub name: String,
}

impl PartialEq for HopfAutomorphism {
    fn eq(&self, other: &Self) -> bool {
        self.carrier.as_ref() == other.carrier.as_ref() && self.matrix == other.matrix
    }
}

impl Eq for HopfAutomorphism {}

impl HopfAutomorphism {
    /// Wraps a candidate matrix after running [`verify_automorphism`].
    pub fn verified(carrier: Arc<HomHopfAlgebra>, matrix: LinMap, name: impl Into<String>) -> Result<Self> {
        let report = verify_automorphism(&carrier, &matrix);
        if !report.all_passed() {
            return Err(Error::Precondition(format!(
                "automorphism check failed: {:?}",
                report.failed_ids()
            )));
        }
        Ok(HopfAutomorphism {
            carrier,
            matrix,
            name: name.into(),
        })
    }

    pub fn identity(carrier: Arc<HomHopfAlgebra>) -> Self {
        HopfAutomorphism {
            matrix: LinMap::identity(carrier.dim),
            carrier,
            name: "id".into(),
        }
    }

    /// Composition `self . rhs` on a shared carrier.
    pub fn compose(&self, rhs: &HopfAutomorphism) -> Result<Self> {
        if self.carrier.as_ref() != rhs.carrier.as_ref() {
            return Err(Error::InvalidInput("automorphism carriers differ".into()));
        }
        let name = if self.matrix.is_identity() {
            rhs.name.clone()
        } else if rhs.matrix.is_identity() {
            self.name.clone()
        } else {
            format!("{}*{}", self.name, rhs.name)
        };
        Ok(HopfAutomorphism {
            carrier: self.carrier.clone(),
            matrix: self.matrix.compose(&rhs.matrix),
            name,
        })
    }

    pub fn inverse(&self) -> Self {
        let name = if self.matrix.is_identity() {
            "id".to_string()
        } else {
            format!("{}^-1", self.name)
        };
        HopfAutomorphism {
            carrier: self.carrier.clone(),
            matrix: self.matrix.inverse().expect("verified automorphisms are invertible"),
            name,
        }
    }

    pub fn map(&self) -> MultilinearMap {
        MultilinearMap::from_lin(&self.matrix)
    }
}

fn swap2(dim: usize) -> MultilinearMap {
    MultilinearMap::permutation(&[dim, dim], &[1, 0])
}

/// Verifies the monoidal Hom-algebra laws exhaustively on all basis tuples.
pub fn check_hom_algebra(a: &HomAlgebra) -> AxiomReport {
    let mut report = AxiomReport::new();
    let id = a.id_map();
    let xi = a.xi_map(1);
    let m = &a.mult;

    // xi(ab) = xi(a) xi(b)
    report.require_map_eq("algebra/xi-multiplicative", &m.then(&xi), &xi.tensor(&xi).then(m));
    // xi(1) = 1
    report.require_vec_eq("algebra/xi-fixes-unit", &a.xi.apply(&a.unit), &a.unit);
    // xi(a)(bc) = (ab) xi(c)
    report.require_map_eq(
        "algebra/hom-associative",
        &xi.tensor(m).then(m),
        &m.tensor(&xi).then(m),
    );
    // a 1 = xi(a) and 1 a = xi(a)
    report.require_map_eq("algebra/unit-right", &id.tensor(&a.unit_map()).then(m), &xi);
    report.require_map_eq("algebra/unit-left", &a.unit_map().tensor(&id).then(m), &xi);
    report
}

/// Verifies the monoidal Hom-coalgebra laws, including both displayed forms of
/// Hom-coassociativity (their agreement is itself an invariant of the theory).
pub fn check_hom_coalgebra(c: &HomCoalgebra) -> AxiomReport {
    let mut report = AxiomReport::new();
    let d = c.dim;
    let id = MultilinearMap::identity(&[d]);
    let xi = MultilinearMap::from_lin(&c.xi);
    let xi_inv = MultilinearMap::from_lin(&c.xi.inverse().expect("twist invertible"));
    let cm = &c.comult;
    let eps = c.counit_map();

    // Delta(xi(c)) = xi(c1) (x) xi(c2)
    report.require_map_eq("coalgebra/xi-comultiplicative", &xi.then(cm), &cm.then(&xi.tensor(&xi)));
    // eps(xi(c)) = eps(c)
    report.require_map_eq("coalgebra/xi-fixes-counit", &xi.then(&eps), &eps);
    // xi^{-1}(c1) (x) Delta(c2) = Delta(c1) (x) xi^{-1}(c2)
    report.require_map_eq(
        "coalgebra/hom-coassociative",
        &cm.then(&xi_inv.tensor(cm)),
        &cm.then(&cm.tensor(&xi_inv)),
    );
    // c1 (x) c21 (x) xi(c22) = xi(c11) (x) c12 (x) c2
    report.require_map_eq(
        "coalgebra/hom-coassociative-shifted",
        &cm.then(&id.tensor(cm)).then(&tensor_all(&[&id, &id, &xi])),
        &cm.then(&cm.tensor(&id)).then(&tensor_all(&[&xi, &id, &id])),
    );
    // c1 eps(c2) = xi^{-1}(c) = eps(c1) c2
    report.require_map_eq("coalgebra/counit-right", &cm.then(&id.tensor(&eps)), &xi_inv);
    report.require_map_eq("coalgebra/counit-left", &cm.then(&eps.tensor(&id)), &xi_inv);
    report
}

/// Verifies the full monoidal Hom-Hopf suite: algebra and coalgebra laws, the
/// bialgebra compatibilities, the antipode convolution identities and the
/// derived antipode properties.
pub fn check_hom_hopf(h: &HomHopfAlgebra) -> AxiomReport {
    let mut report = check_hom_algebra(&h.algebra());
    let co = check_hom_coalgebra(&h.coalgebra());
    for c in co.checks {
        report.checks.push(c);
    }

    let d = h.dim;
    let id = h.id_map();
    let m = &h.mult;
    let cm = &h.comult;
    let eps = h.counit_map();
    let unit = h.unit_map();
    let s = h.antipode_map(1);
    let xi = h.xi_map(1);
    let swap = swap2(d);

    // Delta(hg) = Delta(h) Delta(g)
    let mid = MultilinearMap::permutation(&[d, d, d, d], &[0, 2, 1, 3]);
    report.require_map_eq(
        "hopf/comult-multiplicative",
        &m.then(cm),
        &cm.tensor(cm).then(&mid).then_tensor_pair(m, m),
    );
    // Delta(1) = 1 (x) 1
    report.require_vec_eq(
        "hopf/comult-unit",
        &cm.apply(&h.unit),
        &unit.tensor(&unit).eval_basis(&[]),
    );
    // eps(hg) = eps(h) eps(g)
    report.require_map_eq("hopf/counit-multiplicative", &m.then(&eps), &eps.tensor(&eps));
    // eps(1) = 1
    report.require_vec_eq("hopf/counit-unit", &[crate::mat::pair(&h.counit, &h.unit).expect("dims agree")], &[Scalar::one()]);
    // S(h1) h2 = eps(h) 1 = h1 S(h2)
    let eta_eps = eps.then(&unit);
    report.require_map_eq("hopf/antipode-left", &cm.then(&s.tensor(&id)).then(m), &eta_eps);
    report.require_map_eq("hopf/antipode-right", &cm.then(&id.tensor(&s)).then(m), &eta_eps);
    // S(hg) = S(g) S(h)
    report.require_map_eq(
        "hopf/antipode-anti-multiplicative",
        &m.then(&s),
        &s.tensor(&s).then(&swap).then(m),
    );
    // S(1) = 1
    report.require_vec_eq("hopf/antipode-unit", &h.antipode.apply(&h.unit), &h.unit);
    // Delta(S(h)) = S(h2) (x) S(h1)
    report.require_map_eq(
        "hopf/antipode-anti-comultiplicative",
        &s.then(cm),
        &cm.then(&swap).then(&s.tensor(&s)),
    );
    // eps . S = eps
    report.require_map_eq("hopf/counit-antipode", &s.then(&eps), &eps);
    // S . xi = xi . S
    report.require_map_eq("hopf/antipode-xi-commute", &xi.then(&s), &s.then(&xi));
    report
}

/// Verifies that a candidate matrix is an automorphism of the monoidal
/// Hom-Hopf algebra: invertible, twist-commuting, an algebra map, a coalgebra
/// map, and antipode-commuting.
pub fn verify_automorphism(h: &HomHopfAlgebra, phi: &LinMap) -> AxiomReport {
    let mut report = AxiomReport::new();
    if phi.domain_dim() != h.dim || phi.codomain_dim() != h.dim {
        report.push_result("aut/shape", false);
        return report;
    }
    report.push_result("aut/shape", true);
    report.require_invertible("aut/invertible", phi);

    let f = MultilinearMap::from_lin(phi);
    let xi = h.xi_map(1);
    let m = &h.mult;
    let cm = &h.comult;
    let s = h.antipode_map(1);
    let eps = h.counit_map();

    report.require_map_eq("aut/xi-commute", &xi.then(&f), &f.then(&xi));
    report.require_map_eq("aut/multiplicative", &m.then(&f), &f.tensor(&f).then(m));
    report.require_vec_eq("aut/unit", &phi.apply(&h.unit), &h.unit);
    report.require_map_eq("aut/comultiplicative", &f.then(cm), &cm.then(&f.tensor(&f)));
    report.require_map_eq("aut/counit", &f.then(&eps), &eps);
    report.require_map_eq("aut/antipode-commute", &s.then(&f), &f.then(&s));
    report
}

/// Searches for group-like elements `g` with `xi(g) = g`, `Delta(g) = g (x) g`
/// and `eps(g) = 1`.
///
/// Solving `Delta(g) = g (x) g` exactly is a quadratic system, so the search
/// sweeps a finite candidate set: every vector with coefficients in
/// `{0, 1, -1}` supported on at most two basis elements, together with any
/// caller-supplied extra candidates.
pub fn find_group_likes(h: &HomHopfAlgebra, extra: &[Vec<Scalar>]) -> Vec<Vec<Scalar>> {
    let d = h.dim;
    let mut candidates: Vec<Vec<Scalar>> = Vec::new();
    let values = [Scalar::one(), -Scalar::one()];
    for i in 0..d {
        for vi in &values {
            let mut v = vec![Scalar::zero(); d];
            v[i] = vi.clone();
            candidates.push(v);
        }
    }
    for i in 0..d {
        for j in (i + 1)..d {
            for vi in &values {
                for vj in &values {
                    let mut v = vec![Scalar::zero(); d];
                    v[i] = vi.clone();
                    v[j] = vj.clone();
                    candidates.push(v);
                }
            }
        }
    }
    candidates.extend_from_slice(extra);

    let mut found = Vec::new();
    for g in candidates {
        if is_group_like(h, &g) && !found.contains(&g) {
            found.push(g);
        }
    }
    found
}

/// Tests the three group-like conditions for a single vector.
pub fn is_group_like(h: &HomHopfAlgebra, g: &[Scalar]) -> bool {
    if g.len() != h.dim {
        return false;
    }
    if h.xi.apply(g) != g {
        return false;
    }
    let eps_g = crate::mat::pair(&h.counit, g).expect("dims agree");
    if !eps_g.is_one() {
        return false;
    }
    let mut square = Vec::with_capacity(h.dim * h.dim);
    for x in g {
        for y in g {
            square.push(x * y);
        }
    }
    h.comult.apply(g) == square
}

/// Twists a classical Hopf algebra (`xi = id`) along a Hopf automorphism:
/// the product becomes `phi . m`, the coproduct `(phi^{-1} (x) phi^{-1}) . Delta`,
/// and `phi` itself becomes the twist. Unit, counit and antipode are kept.
pub fn yau_twist(h: &HomHopfAlgebra, phi: &HopfAutomorphism) -> Result<HomHopfAlgebra> {
    if !h.xi.is_identity() {
        return Err(Error::Precondition("twisting starts from a classical structure (xi = id)".into()));
    }
    if phi.carrier.as_ref() != h {
        return Err(Error::InvalidInput("automorphism belongs to a different carrier".into()));
    }
    let classical = check_hom_hopf(h);
    if !classical.all_passed() {
        return Err(Error::Precondition(format!(
            "classical Hopf axioms fail: {:?}",
            classical.failed_ids()
        )));
    }
    let phi_inv = phi.matrix.inverse().expect("verified automorphism");
    let mult = h.mult.then(&MultilinearMap::from_lin(&phi.matrix));
    let comult = h.comult.then(&MultilinearMap::from_lin(&phi_inv).tensor(&MultilinearMap::from_lin(&phi_inv)));
    HomHopfAlgebra::new(
        h.dim,
        phi.matrix.clone(),
        mult,
        h.unit.clone(),
        comult,
        h.counit.clone(),
        h.antipode.clone(),
        h.basis.clone(),
    )
}

/// The dual monoidal Hom-Hopf algebra on the dual basis.
///
/// Multiplication is the transpose of `Delta`, comultiplication the transpose
/// of `m`, the unit is the counit, the counit is evaluation at `1`, the
/// antipode is the transpose of `S`, and the twist is `f -> f . xi^{-1}`,
/// so that the twisted unit law holds on functionals.
pub fn dual_hopf(h: &HomHopfAlgebra) -> Result<HomHopfAlgebra> {
    let d = h.dim;
    let mult = MultilinearMap::new(vec![d, d], vec![d], dualize(h.comult.as_lin()));
    let comult = MultilinearMap::new(vec![d], vec![d, d], dualize(h.mult.as_lin()));
    let xi_dual = dualize(&h.xi).inverse().expect("twist invertible");
    let basis = h.basis.iter().map(|b| format!("{b}*")).collect();
    HomHopfAlgebra::new(
        d,
        xi_dual,
        mult,
        h.counit.clone(),
        comult,
        h.unit.clone(),
        dualize(&h.antipode),
        basis,
    )
}
