//! Harpoon actions, the diagonal crossed product `H* |><| A`, the Drinfeld
//! double, and the module-category equivalence functors.
//!
//! The dual `H*` carries the twist `f -> f . xi^{-1}`; the harpoons evaluate
//! one comultiplication leg of a functional against a twisted argument. The
//! diagonal crossed product multiplies `H* (x) A` along both coactions of a
//! bicomodule algebra, and specializing the bicomodule structure recovers the
//! Drinfeld double and the pair-labeled products.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::hopf::{dual_hopf, HomAlgebra, HomHopfAlgebra};
use crate::mat::{dualize, LinMap};
use crate::multilinear::{flatten_index, MultilinearMap};
use crate::rep::{check_bicomodule_algebra, check_module, BicomoduleAlgebra, HomBimodule, HomModule};
use crate::report::AxiomReport;
use crate::scalar::Scalar;
use crate::yd::{evaluation, YDDatumModule};

/// `k`-th power of the dual twist `f -> f . xi^{-k}` as a matrix on
/// functional coefficients.
pub fn dual_twist_pow(h: &HomHopfAlgebra, k: i64) -> LinMap {
    dualize(&h.xi_pow(-k))
}

/// Comultiplication of the dual: the transpose of the multiplication.
pub fn dual_comult(h: &HomHopfAlgebra) -> MultilinearMap {
    MultilinearMap::new(vec![h.dim], vec![h.dim, h.dim], dualize(h.mult.as_lin()))
}

/// Multiplication of the dual: the transpose of the comultiplication.
pub fn dual_mult(h: &HomHopfAlgebra) -> MultilinearMap {
    MultilinearMap::new(vec![h.dim, h.dim], vec![h.dim], dualize(h.comult.as_lin()))
}

/// The harpoon actions of `H` on `H*`:
/// `h -> f = <f_2, xi^{-1}(h)> f_1 . xi^{-2}` (left, `H (x) H* -> H*`) and
/// `f <- h = <f_1, xi^{-1}(h)> f_2 . xi^{-2}` (right, `H* (x) H -> H*`).
pub fn harpoons(h: &HomHopfAlgebra) -> (MultilinearMap, MultilinearMap) {
    let d = h.dim;
    let cm_star = dual_comult(h);
    let shift = MultilinearMap::from_lin(&dual_twist_pow(h, 2));
    let eval = evaluation(d);
    let xi_inv = h.xi_map(-1);

    // left: (h, f) -> swap -> (f1, f2, xi^{-1} h) -> shift(f1) . <f2, .>
    let swap = MultilinearMap::permutation(&[d, d], &[1, 0]);
    let left = swap
        .then(&cm_star.tensor(&xi_inv))
        .then(&shift.tensor(&eval));

    // right: (f, h) -> (f1, f2, xi^{-1} h) -> <f1, .> . shift(f2)
    let expand = cm_star.tensor(&xi_inv);
    let perm = MultilinearMap::permutation(&[d, d, d], &[0, 2, 1]);
    let right = expand.then(&perm).then(&eval.tensor(&shift));
    (left, right)
}

/// The two harpoons make `H*` an `H`-bimodule with twist `f -> f . xi^{-1}`.
pub fn harpoon_bimodule(h: &HomHopfAlgebra) -> HomBimodule {
    let (left, right) = harpoons(h);
    HomBimodule {
        algebra: h.algebra(),
        dim: h.dim,
        xi: dual_twist_pow(h, 1),
        left,
        right,
    }
}

/// Compatibility of the dual comultiplication with both harpoons:
/// `Delta*(h -> (f <- l)) = (xi*(f_1) <- l) (x) (xi^{-1}(h) -> xi*(f_2))`
/// where `xi*` is the dual twist.
pub fn check_harpoon_comult_identity(h: &HomHopfAlgebra) -> AxiomReport {
    let mut report = AxiomReport::new();
    let d = h.dim;
    let (harpoon_l, harpoon_r) = harpoons(h);
    let cm_star = dual_comult(h);

    // lhs on (h, f, l)
    let inner = harpoon_l.compose(&h.id_map().tensor(&harpoon_r)); // (h, f, l) -> H*
    let lhs = inner.then(&cm_star);

    // rhs: expand f, twist legs, pair up
    let xi_star = MultilinearMap::from_lin(&dual_twist_pow(h, 1));
    let legs = h.xi_map(-1).tensor(&cm_star.then(&xi_star.tensor(&xi_star))).tensor(&h.id_map());
    let perm = MultilinearMap::permutation(&[d, d, d, d], &[1, 3, 0, 2]);
    let rhs = legs.then(&perm).then(&harpoon_r.tensor(&harpoon_l));
    report.require_map_eq("harpoon/comult-compatibility", &lhs, &rhs);
    report
}

/// The diagonal crossed product `H* |><| A` of a finite-dimensional monoidal
/// Hom-Hopf algebra with a bicomodule algebra.
#[derive(Clone, Debug)]
pub struct DiagonalCrossedProduct {
    pub hopf: HomHopfAlgebra,
    /// The dual Hopf structure on `H*`.
    pub dual: HomHopfAlgebra,
    pub base: BicomoduleAlgebra,
    /// The product Hom-algebra on `H* (x) A`.
    pub algebra: HomAlgebra,
}

impl DiagonalCrossedProduct {
    pub fn dim(&self) -> usize {
        self.algebra.dim
    }
}

/// Builds the multiplication
/// `(f |><| a)(g |><| b) = f(a_{[-1]} -> ((g . xi^2) <- S^{-1}(a_{[0]<1>}))) |><| xi_A^2(a_{[0]<0>}) b`
/// from the two coactions of the bicomodule algebra.
fn bowtie_mult(h: &HomHopfAlgebra, base: &BicomoduleAlgebra) -> MultilinearMap {
    let dh = h.dim;
    let da = base.algebra.dim;
    let (harpoon_l, harpoon_r) = harpoons(h);

    // inner right harpoon with shifted arguments: (g, x) -> (g . xi^2) <- S^{-1}(x)
    let hr_shift = harpoon_r.compose(
        &MultilinearMap::from_lin(&dual_twist_pow(h, -2))
            .tensor(&MultilinearMap::from_lin(&h.antipode_pow(-1))),
    );

    let t_a = base
        .rho_l
        .then(&h.id_map().tensor(&base.rho_r)); // a -> (a_{[-1]}, a_{[0]<0>}, a_{[0]<1>})
    let id_f = MultilinearMap::identity(&[dh]);
    let id_b = MultilinearMap::identity(&[da]);

    let step1 = id_f.tensor(&t_a).tensor(&id_f).tensor(&id_b); // f a-1 a00 a01 g b
    let perm = MultilinearMap::permutation(&[dh, dh, da, dh, dh, da], &[0, 1, 4, 3, 2, 5]); // f a-1 g a01 a00 b
    let step2 = id_f
        .tensor(&MultilinearMap::identity(&[dh]))
        .tensor(&hr_shift)
        .tensor(&MultilinearMap::identity(&[da]))
        .tensor(&id_b); // f a-1 u a00 b
    let step3 = id_f
        .tensor(&harpoon_l)
        .tensor(&MultilinearMap::identity(&[da]))
        .tensor(&id_b); // f v a00 b
    let base_mult = base
        .algebra
        .mult
        .compose(&base.algebra.xi_map(2).tensor(&id_b));
    let finish = dual_mult(h).tensor(&base_mult);

    step1
        .then(&perm)
        .then(&step2)
        .then(&step3)
        .then(&finish)
        .regroup(vec![dh * da, dh * da], vec![dh * da])
}

/// Diagonal crossed product of `H` with a bicomodule algebra `A`. Both inputs
/// are re-validated; the result is a Hom-algebra on `H* (x) A` with twist
/// `xi_{H*} (x) xi_A` and unit `eps (x) 1_A`.
pub fn diagonal_crossed_product(
    h: &HomHopfAlgebra,
    base: &BicomoduleAlgebra,
) -> Result<DiagonalCrossedProduct> {
    let hopf_report = crate::hopf::check_hom_hopf(h);
    if !hopf_report.all_passed() {
        return Err(Error::Precondition(format!(
            "Hopf axioms fail: {:?}",
            hopf_report.failed_ids()
        )));
    }
    if base.hopf != *h {
        return Err(Error::InvalidInput("bicomodule algebra is over a different Hopf structure".into()));
    }
    let base_report = check_bicomodule_algebra(base);
    if !base_report.all_passed() {
        return Err(Error::Precondition(format!(
            "bicomodule axioms fail: {:?}",
            base_report.failed_ids()
        )));
    }
    Ok(diagonal_crossed_product_unchecked(h, base))
}

pub(crate) fn diagonal_crossed_product_unchecked(
    h: &HomHopfAlgebra,
    base: &BicomoduleAlgebra,
) -> DiagonalCrossedProduct {
    let dual = dual_hopf(h).expect("dual of a valid structure");
    let mult = bowtie_mult(h, base);
    let mut unit = Vec::with_capacity(h.dim * base.algebra.dim);
    for f in &h.counit {
        for a in &base.algebra.unit {
            unit.push(f * a);
        }
    }
    let xi = dual.xi.kronecker(&base.algebra.xi);
    let algebra = HomAlgebra::new(h.dim * base.algebra.dim, xi, mult, unit)
        .expect("product tensors are well formed");
    DiagonalCrossedProduct {
        hopf: h.clone(),
        dual,
        base: base.clone(),
        algebra,
    }
}

/// The Drinfeld double `D(H) = H*^{cop} |><| H`: the diagonal crossed product
/// along the regular bicomodule structure, equipped with the coproduct
/// `f |><| h -> (f_2 |><| h_1) (x) (f_1 |><| h_2)`, the counit
/// `f |><| h -> eps(h) f(1)`, and the antipode of the unit-pair component.
pub struct DrinfeldDouble {
    pub product: DiagonalCrossedProduct,
    pub hopf: HomHopfAlgebra,
    pub report: AxiomReport,
}

/// Antipode `S(f |><| h) = (eps |><| a b S xi^{-1}(h)) . (f . xi S^{-1} |><| 1)`
/// with the product taken in the component the antipode lands in.
pub(crate) fn bowtie_antipode(
    h: &HomHopfAlgebra,
    alpha: &LinMap,
    beta: &LinMap,
    target_mult: &MultilinearMap,
) -> LinMap {
    let dh = h.dim;
    let eps_leg = MultilinearMap::constant(vec![dh], &h.counit);
    let unit_leg = MultilinearMap::constant(vec![dh], &h.unit);
    let h_leg = MultilinearMap::from_lin(&alpha.compose(beta).compose(&h.antipode).compose(&h.xi_pow(-1)));
    // f -> f . xi S^{-1}
    let f_leg = MultilinearMap::from_lin(&dualize(&h.xi_pow(1).compose(&h.antipode_pow(-1))));

    let u1 = eps_leg.tensor(&h_leg); // H -> (H*, H)
    let u2 = f_leg.tensor(&unit_leg); // H* -> (H*, H)
    let swap = MultilinearMap::permutation(&[dh, dh], &[1, 0]);
    let composite = swap
        .then(&u1.tensor(&u2))
        .regroup(vec![dh * dh], vec![dh * dh, dh * dh])
        .then(target_mult);
    composite.into_lin()
}

/// Builds the Drinfeld double and runs the full Hom-Hopf suite on it.
pub fn drinfeld_double(h: &HomHopfAlgebra) -> Result<DrinfeldDouble> {
    let base = BicomoduleAlgebra::regular(h);
    let product = diagonal_crossed_product(h, &base)?;
    let d = h.dim;
    let dd = d * d;

    let cm_star = dual_comult(h);
    let comult = cm_star
        .tensor(&h.comult)
        .then(&MultilinearMap::permutation(&[d, d, d, d], &[1, 2, 0, 3]))
        .regroup(vec![dd], vec![dd, dd]);
    let mut counit = Vec::with_capacity(dd);
    for f in &h.unit {
        for x in &h.counit {
            counit.push(f * x);
        }
    }
    let antipode = bowtie_antipode(
        h,
        &LinMap::identity(d),
        &LinMap::identity(d),
        &product.algebra.mult,
    );
    let basis = {
        let mut v = Vec::with_capacity(dd);
        for f in &h.basis {
            for x in &h.basis {
                v.push(format!("{f}*|{x}"));
            }
        }
        v
    };
    let hopf = HomHopfAlgebra::new(
        dd,
        product.algebra.xi.clone(),
        product.algebra.mult.clone(),
        product.algebra.unit.clone(),
        comult,
        counit,
        antipode,
        basis,
    )?;
    let report = crate::hopf::check_hom_hopf(&hopf);
    Ok(DrinfeldDouble { product, hopf, report })
}

/// The `D(H)`-bicomodule structure on `H* |><| A`:
/// `rho_r(f |><| a) = (f_2 |><| a_{<0>}) (x) (f_1 (x) a_{<1>})` and
/// `rho_l(f |><| a) = (f_2 |><| a_{[-1]}) (x) (f_1 (x) a_{[0]})`.
pub fn dh_bicomodule(
    double: &DrinfeldDouble,
    product: &DiagonalCrossedProduct,
) -> Result<BicomoduleAlgebra> {
    if double.product.hopf != product.hopf {
        return Err(Error::InvalidInput("double and product are over different Hopf structures".into()));
    }
    let h = &product.hopf;
    let d = h.dim;
    let da = product.base.algebra.dim;
    let cm_star = dual_comult(h);

    let rho_r = cm_star
        .tensor(&product.base.rho_r)
        .then(&MultilinearMap::permutation(&[d, d, da, d], &[1, 2, 0, 3]))
        .regroup(vec![d * da], vec![d * da, d * d]);
    let rho_l = cm_star
        .tensor(&product.base.rho_l)
        .then(&MultilinearMap::permutation(&[d, d, d, da], &[1, 2, 0, 3]))
        .regroup(vec![d * da], vec![d * d, d * da]);

    Ok(BicomoduleAlgebra::new(
        double.hopf.clone(),
        product.algebra.clone(),
        rho_l,
        rho_r,
    ))
}

/// The forward equivalence functor: a datum module becomes a module over the
/// diagonal crossed product via
/// `(f |><| u) |> m = <f, (u . xi_M^{-1}(m))_1> xi_M^2((u . xi_M^{-1}(m))_0)`.
pub fn functor_f(product: &DiagonalCrossedProduct, m: &YDDatumModule) -> Result<HomModule> {
    if m.bicomodule != product.base {
        return Err(Error::InvalidInput("datum module is over a different bicomodule algebra".into()));
    }
    let datum_report = crate::yd::check_datum_module(m);
    if !datum_report.all_passed() {
        return Err(Error::Precondition(format!(
            "datum-module axioms fail: {:?}",
            datum_report.failed_ids()
        )));
    }
    Ok(functor_f_unchecked(product, m))
}

pub(crate) fn functor_f_unchecked(product: &DiagonalCrossedProduct, m: &YDDatumModule) -> HomModule {
    let h = &product.hopf;
    let (dh, da, dm) = (h.dim, product.base.algebra.dim, m.dim);
    let x = m
        .coaction
        .compose(&m.action)
        .compose(&MultilinearMap::identity(&[da]).tensor(&m.xi_map(-1))); // (u, m) -> (X0, X1)
    let legs = MultilinearMap::identity(&[dh]).tensor(&x); // f X0 X1
    let perm = MultilinearMap::permutation(&[dh, dm, dh], &[1, 0, 2]);
    let finish = m.xi_map(2).tensor(&evaluation(dh));
    let action = legs
        .then(&perm)
        .then(&finish)
        .regroup(vec![dh * da, dm], vec![dm]);
    HomModule::new(product.algebra.clone(), dm, m.xi.clone(), action)
}

/// The reverse equivalence functor: a module over the diagonal crossed
/// product becomes a datum module with
/// `u . m = (eps |><| xi_A^{-1}(u)) |> m` and the dual-basis coaction.
pub fn functor_g(product: &DiagonalCrossedProduct, n: &HomModule) -> Result<YDDatumModule> {
    if n.algebra != product.algebra {
        return Err(Error::InvalidInput("module is not over this crossed product".into()));
    }
    let module_report = check_module(n);
    if !module_report.all_passed() {
        return Err(Error::Precondition(format!(
            "module axioms fail: {:?}",
            module_report.failed_ids()
        )));
    }
    Ok(functor_g_unchecked(product, n))
}

pub(crate) fn functor_g_unchecked(product: &DiagonalCrossedProduct, n: &HomModule) -> YDDatumModule {
    let h = &product.hopf;
    let (dh, da, dm) = (h.dim, product.base.algebra.dim, n.dim);
    let tri = &n.action; // (H* |><| A) (x) M -> M

    // action: A (x) M -> M
    let eps_leg = MultilinearMap::constant(vec![dh], &h.counit);
    let embed_a = eps_leg
        .tensor(&MultilinearMap::from_lin(
            &product.base.algebra.xi.inverse().expect("invertible twist"),
        ))
        .regroup(vec![da], vec![dh * da]);
    let action = tri.compose(&embed_a.tensor(&MultilinearMap::identity(&[dm])));

    // coaction via the dual basis: m -> sum_a ((e^a . xi^2) |><| 1_A) |> xi_M^{-2}(m) (x) e_a
    let unit_leg = MultilinearMap::constant(vec![da], &product.base.algebra.unit);
    let embed_f = MultilinearMap::from_lin(&dual_twist_pow(h, -2))
        .tensor(&unit_leg)
        .regroup(vec![dh], vec![dh * da]);
    let e = tri.compose(&embed_f.tensor(&MultilinearMap::from_lin(
        &n.xi.pow(-2).expect("invertible twist"),
    ))); // (H*, M) -> M
    let coaction = MultilinearMap::from_fn(vec![dm], vec![dm, dh], |out, idx| {
        e.as_lin()
            .get(out[0], flatten_index(&[dh, dm], &[out[1], idx[0]]))
    });

    YDDatumModule::new(product.base.clone(), dm, n.xi.clone(), action, coaction)
}

/// Literal basis-level construction of the double multiplication
/// `(f |><| h)(g |><| l) = f(h_1 -> (xi*2(g) <- S^{-1}(h_22))) |><| xi^2(h_21) l`,
/// evaluated coefficientwise as an independent route for cross-checking.
pub fn double_mult_literal(h: &HomHopfAlgebra) -> MultilinearMap {
    pair_mult_literal(h, &LinMap::identity(h.dim), &LinMap::identity(h.dim))
}

/// Literal basis-level construction of the pair-labeled multiplication
/// `(f |><| h)(g |><| l) = f(a(h_1) -> (xi*2(g) <- S^{-1}(b(h_22)))) |><| xi^2(h_21) l`.
pub fn pair_mult_literal(h: &HomHopfAlgebra, alpha: &LinMap, beta: &LinMap) -> MultilinearMap {
    let d = h.dim;
    let (harpoon_l, harpoon_r) = harpoons(h);
    let hstar_m = dual_mult(h);
    let xi_star2 = dual_twist_pow(h, -2);
    let s_inv = h.antipode_pow(-1);
    let xi2 = h.xi_pow(2);

    // bilinear helper: image of x (x) y under a two-leg map, for dense x, y
    let bilinear = |map: &MultilinearMap, x: &[Scalar], y: &[Scalar]| -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(); map.outs().iter().product()];
        for (i, xv) in x.iter().enumerate() {
            if xv.is_zero() {
                continue;
            }
            for (j, yv) in y.iter().enumerate() {
                if yv.is_zero() {
                    continue;
                }
                for (k, w) in map.eval_basis(&[i, j]).iter().enumerate() {
                    if !w.is_zero() {
                        out[k] += w * xv * yv;
                    }
                }
            }
        }
        out
    };
    let basis_vec = |i: usize| -> Vec<Scalar> {
        let mut v = vec![Scalar::zero(); d];
        v[i] = crate::scalar::one();
        v
    };

    let mat = LinMap::from_columns(d * d, d * d * d * d, |col| {
        let gl = col % (d * d);
        let fh = col / (d * d);
        let (fi, hi) = (fh / d, fh % d);
        let (gi, li) = (gl / d, gl % d);

        let mut out = vec![Scalar::zero(); d * d];
        // h_1 (x) h_21 (x) h_22 from two comultiplications
        for (r1, c1) in h.comult.as_lin().sparse_column(hi) {
            let h1 = r1 / d;
            let h2 = r1 % d;
            for (r2, c2) in h.comult.as_lin().sparse_column(h2) {
                let h21 = r2 / d;
                let h22 = r2 % d;
                let coeff = c1 * c2;
                // u = xi*2(g) <- S^{-1}(b(h22))
                let g_shift = xi_star2.column(gi);
                let arg = s_inv.apply(&beta.column(h22));
                let u = bilinear(&harpoon_r, &g_shift, &arg);
                // v = a(h1) -> u
                let v = bilinear(&harpoon_l, &alpha.column(h1), &u);
                // f . v in H*
                let fv = bilinear(&hstar_m, &basis_vec(fi), &v);
                // xi^2(h21) . l in H
                let hl = bilinear(&h.mult, &xi2.column(h21), &basis_vec(li));
                for (a, x) in fv.iter().enumerate() {
                    if x.is_zero() {
                        continue;
                    }
                    for (b, y) in hl.iter().enumerate() {
                        if !y.is_zero() {
                            out[a * d + b] += &coeff * x * y;
                        }
                    }
                }
            }
        }
        out
    });
    MultilinearMap::new(vec![d * d, d * d], vec![d * d], mat)
}
