//! Built-in example structures, parameterized and checker-validated at build
//! time.
//!
//! The registry is the single source of fixtures for tests and the CLI:
//! the four-dimensional twisted algebra family `h4(c)`, its classical limit
//! (the Sweedler-type algebra), cyclic group algebras with scaling-automorphism
//! twists, and the literal shifted cyclic tables (which deliberately fail the
//! axiom suite and are kept to document that failure).

use std::collections::BTreeMap;
use std::sync::Arc;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::hopf::{
    check_hom_hopf, yau_twist, HomHopfAlgebra, HopfAutomorphism,
};
use crate::mat::LinMap;
use crate::multilinear::MultilinearMap;
use crate::report::AxiomReport;
use crate::scalar::{int, one, zero, Scalar};

/// Description of a buildable example: name, parameters and what it is.
#[derive(Clone, Debug)]
pub struct ExampleSpec {
    pub name: String,
    pub parameters: BTreeMap<String, String>,
    pub notes: String,
}

/// A built example together with the report of its own axiom suite.
pub struct BuiltExample {
    pub spec: ExampleSpec,
    pub hopf: HomHopfAlgebra,
    pub report: AxiomReport,
}

/// Classical Sweedler-type algebra on basis `{1, g, x, y}` with `g^2 = 1`,
/// `x^2 = 0`, `xg = -gx`, `y = gx`; twist is the identity.
pub fn build_sweedler() -> HomHopfAlgebra {
    build_h4_raw(&one(), true).expect("classical tables are well formed")
}

/// The four-dimensional monoidal Hom-Hopf algebra `h4(c)`: the Sweedler-type
/// algebra twisted by the scaling automorphism `x -> cx`, given by its literal
/// structure tables. `c` must be nonzero.
pub fn build_h4(c: &Scalar) -> Result<HomHopfAlgebra> {
    if c.is_zero() {
        return Err(Error::InvalidInput("the parameter c must be nonzero".into()));
    }
    build_h4_raw(c, false)
}

fn build_h4_raw(c: &Scalar, classical: bool) -> Result<HomHopfAlgebra> {
    let d = 4usize;
    // basis order: 1, g, x, y
    let basis: Vec<String> = ["1", "g", "x", "y"].iter().map(|s| s.to_string()).collect();
    let e = |i: usize| -> Vec<Scalar> {
        let mut v = vec![zero(); 4];
        v[i] = one();
        v
    };
    let scaled = |i: usize, s: Scalar| -> Vec<Scalar> {
        let mut v = vec![zero(); 4];
        v[i] = s;
        v
    };
    let zero_vec = vec![zero(); 4];

    // Multiplication table, rows index the left factor.
    let table: [[Vec<Scalar>; 4]; 4] = [
        [e(0), e(1), scaled(2, c.clone()), scaled(3, c.clone())],
        [e(1), e(0), scaled(3, c.clone()), scaled(2, c.clone())],
        [scaled(2, c.clone()), scaled(3, -c.clone()), zero_vec.clone(), zero_vec.clone()],
        [scaled(3, c.clone()), scaled(2, -c.clone()), zero_vec.clone(), zero_vec.clone()],
    ];
    let mult = MultilinearMap::from_fn(vec![d, d], vec![d], |out, idx| table[idx[0]][idx[1]][out[0]].clone());

    let xi = if classical {
        LinMap::identity(d)
    } else {
        LinMap::from_fn(d, d, |r, col| {
            if r != col {
                zero()
            } else if r >= 2 {
                c.clone()
            } else {
                one()
            }
        })
    };

    let c_inv = if classical { one() } else { one() / c };
    // Delta: 1 -> 1(x)1, g -> g(x)g, x -> c^{-1}(x(x)1 + g(x)x),
    // y -> c^{-1}(y(x)g + 1(x)y); in the classical limit c^{-1} is 1.
    let comult = MultilinearMap::from_fn(vec![d], vec![d, d], |out, idx| match idx[0] {
        0 => {
            if out == [0, 0] {
                one()
            } else {
                zero()
            }
        }
        1 => {
            if out == [1, 1] {
                one()
            } else {
                zero()
            }
        }
        2 => {
            if out == [2, 0] || out == [1, 2] {
                c_inv.clone()
            } else {
                zero()
            }
        }
        _ => {
            if out == [3, 1] || out == [0, 3] {
                c_inv.clone()
            } else {
                zero()
            }
        }
    });

    let counit = vec![one(), one(), zero(), zero()];
    let unit = e(0);

    // S: 1 -> 1, g -> g, x -> -y, y -> x. The value S(y) = x is forced by the
    // convolution identities against the tables above.
    let antipode = LinMap::from_fn(d, d, |r, col| match (r, col) {
        (0, 0) | (1, 1) | (2, 3) => one(),
        (3, 2) => -one(),
        _ => zero(),
    });

    HomHopfAlgebra::new(d, xi, mult, unit, comult, counit, antipode, basis)
}

/// The diagonal scaling automorphism of `h4(c)`: fixes `1` and `g`, scales
/// `x` and `y` by `lambda`.
pub fn h4_automorphism(h: &Arc<HomHopfAlgebra>, lambda: &Scalar) -> Result<HopfAutomorphism> {
    if lambda.is_zero() {
        return Err(Error::InvalidInput("lambda must be nonzero".into()));
    }
    let m = LinMap::from_fn(4, 4, |r, c| {
        if r != c {
            zero()
        } else if r >= 2 {
            lambda.clone()
        } else {
            one()
        }
    });
    HopfAutomorphism::verified(h.clone(), m, format!("phi({})", crate::scalar::render_scalar(lambda)))
}

/// Classical group algebra of the cyclic group of order `n`, basis `a^0..a^{n-1}`.
pub fn build_cyclic_group_algebra(n: usize) -> Result<HomHopfAlgebra> {
    if n < 1 {
        return Err(Error::InvalidInput("order must be at least 1".into()));
    }
    let basis = (0..n).map(|i| format!("a^{i}")).collect();
    let mult = MultilinearMap::from_fn(vec![n, n], vec![n], |out, idx| {
        if out[0] == (idx[0] + idx[1]) % n {
            one()
        } else {
            zero()
        }
    });
    let comult = MultilinearMap::from_fn(vec![n], vec![n, n], |out, idx| {
        if out[0] == idx[0] && out[1] == idx[0] {
            one()
        } else {
            zero()
        }
    });
    let counit = vec![one(); n];
    let mut unit = vec![zero(); n];
    unit[0] = one();
    let antipode = LinMap::from_fn(n, n, |r, c| if r == (n - c % n) % n { one() } else { zero() });
    HomHopfAlgebra::new(n, LinMap::identity(n), mult, unit, comult, counit, antipode, basis)
}

/// The group automorphism `a -> a^t` of the cyclic group algebra,
/// for `gcd(t, n) = 1`.
pub fn cyclic_automorphism(h: &Arc<HomHopfAlgebra>, t: usize) -> Result<HopfAutomorphism> {
    let n = h.dim;
    if gcd(t, n) != 1 {
        return Err(Error::InvalidInput(format!("t = {t} is not coprime to n = {n}")));
    }
    let m = LinMap::from_fn(n, n, |r, c| if r == (c * t) % n { one() } else { zero() });
    HopfAutomorphism::verified(h.clone(), m, format!("sigma({t})"))
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Twists the cyclic group algebra of order `n` along `a -> a^t`. The result
/// is a monoidal Hom-Hopf algebra with `a^i . a^j = a^{t(i+j)}` and grouplike
/// twist `sigma_t`.
pub fn build_cyclic_twist(n: usize, t: usize) -> Result<HomHopfAlgebra> {
    if n < 2 {
        return Err(Error::InvalidInput("order must be at least 2".into()));
    }
    if gcd(t % n, n) != 1 {
        return Err(Error::InvalidInput(format!("t = {t} is not coprime to n = {n}")));
    }
    let classical = Arc::new(build_cyclic_group_algebra(n)?);
    let sigma = cyclic_automorphism(&classical, t % n)?;
    yau_twist(&classical, &sigma)
}

/// The literal shifted cyclic tables: product `a^i . a^j = a^{i+j-2}`,
/// coproduct `a^i -> a^{i-2} (x) a^{i-2}`, antipode `a^i -> a^{-i}`, and the
/// twist `a^k -> a^{k+2}` those tables imply.
///
/// For `n > 2` this candidate fails the Hom-algebra laws (the twist moves the
/// unit), which is exactly what the attached report documents; `n = 2` makes
/// the shift trivial and the candidate classical.
pub fn build_cyclic_literal(n: usize) -> Result<(HomHopfAlgebra, AxiomReport)> {
    if n < 2 {
        return Err(Error::InvalidInput("order must be at least 2".into()));
    }
    let basis = (0..n).map(|i| format!("a^{i}")).collect();
    let shift = |k: usize, by: i64| -> usize {
        let m = n as i64;
        (((k as i64 + by) % m + m) % m) as usize
    };
    let mult = MultilinearMap::from_fn(vec![n, n], vec![n], |out, idx| {
        if out[0] == shift(idx[0] + idx[1], -2) {
            one()
        } else {
            zero()
        }
    });
    let comult = MultilinearMap::from_fn(vec![n], vec![n, n], |out, idx| {
        let target = shift(idx[0], -2);
        if out[0] == target && out[1] == target {
            one()
        } else {
            zero()
        }
    });
    let counit = vec![one(); n];
    let mut unit = vec![zero(); n];
    unit[0] = one();
    let antipode = LinMap::from_fn(n, n, |r, c| if r == (n - c % n) % n { one() } else { zero() });
    let xi = LinMap::from_fn(n, n, |r, c| if r == shift(c, 2) { one() } else { zero() });
    let hopf = HomHopfAlgebra::new(n, xi, mult, unit, comult, counit, antipode, basis)?;
    let report = check_hom_hopf(&hopf);
    Ok((hopf, report))
}

/// Registry names addressable from the CLI.
pub const REGISTRY_NAMES: &[&str] = &["h4", "sweedler", "cyclic-twist", "cyclic-literal"];

/// Builds a registry example by name. Parameters: `c` for `h4`,
/// `n`/`t` for the cyclic builders.
pub fn build_example(name: &str, params: &BTreeMap<String, String>) -> Result<BuiltExample> {
    let get_usize = |key: &str, default: Option<usize>| -> Result<usize> {
        match params.get(key) {
            Some(v) => v
                .parse()
                .map_err(|_| Error::InvalidInput(format!("parameter {key} = {v:?} is not an integer"))),
            None => default.ok_or_else(|| Error::InvalidInput(format!("missing parameter {key}"))),
        }
    };
    let (hopf, report, notes) = match name {
        "h4" => {
            let c = match params.get("c") {
                Some(v) => crate::scalar::parse_scalar(v)?,
                None => int(1),
            };
            let h = build_h4(&c)?;
            let report = check_hom_hopf(&h);
            (h, report, "four-dimensional algebra twisted by a diagonal scaling".to_string())
        }
        "sweedler" => {
            let h = build_sweedler();
            let report = check_hom_hopf(&h);
            (h, report, "classical four-dimensional algebra (identity twist)".to_string())
        }
        "cyclic-twist" => {
            let n = get_usize("n", Some(5))?;
            let t = get_usize("t", Some(2))?;
            let h = build_cyclic_twist(n, t)?;
            let report = check_hom_hopf(&h);
            (h, report, "cyclic group algebra twisted by a group automorphism".to_string())
        }
        "cyclic-literal" => {
            let n = get_usize("n", Some(5))?;
            let (h, report) = build_cyclic_literal(n)?;
            (h, report, "literal shifted cyclic tables; fails the suite for n > 2".to_string())
        }
        other => return Err(Error::InvalidInput(format!("unknown example {other:?}"))),
    };
    Ok(BuiltExample {
        spec: ExampleSpec {
            name: name.to_string(),
            parameters: params.clone(),
            notes,
        },
        hopf,
        report,
    })
}
