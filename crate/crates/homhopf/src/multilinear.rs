//! Dense-semantics multilinear maps between tensor products of based spaces.
//!
//! A [`MultilinearMap`] is a linear map `V_1 (x) ... (x) V_k -> W_1 (x) ... (x) W_l`
//! stored as its structure-constant matrix over the flattened tensor-product
//! bases. Flattening is row-major with the left factor slowest, fixed once and
//! never permuted implicitly; every structure tensor in the library (products,
//! coproducts, actions, coactions) is such a map, and every axiom is an exact
//! equality of two composites.

use std::fmt;

use crate::error::{Error, Result};
use crate::mat::LinMap;
use crate::scalar::Scalar;

/// Flattens a multi-index against leg dimensions (left leg slowest).
pub fn flatten_index(dims: &[usize], idx: &[usize]) -> usize {
    assert_eq!(dims.len(), idx.len(), "multi-index arity mismatch");
    let mut flat = 0;
    for (d, i) in dims.iter().zip(idx) {
        assert!(i < d, "multi-index out of range");
        flat = flat * d + i;
    }
    flat
}

/// Inverse of [`flatten_index`].
pub fn unflatten_index(dims: &[usize], mut flat: usize) -> Vec<usize> {
    let mut idx = vec![0; dims.len()];
    for (k, d) in dims.iter().enumerate().rev() {
        idx[k] = flat % d;
        flat /= d;
    }
    idx
}

fn product(dims: &[usize]) -> usize {
    dims.iter().product()
}

/// Linear map between tensor products of based spaces.
#[derive(Clone, PartialEq, Eq)]
pub struct MultilinearMap {
    ins: Vec<usize>,
    outs: Vec<usize>,
    mat: LinMap,
}

impl MultilinearMap {
    pub fn new(ins: Vec<usize>, outs: Vec<usize>, mat: LinMap) -> Self {
        assert_eq!(mat.domain_dim(), product(&ins), "input shape mismatch");
        assert_eq!(mat.codomain_dim(), product(&outs), "output shape mismatch");
        MultilinearMap { ins, outs, mat }
    }

    /// Wraps a linear map as a one-leg-in, one-leg-out multilinear map.
    pub fn from_lin(f: &LinMap) -> Self {
        MultilinearMap {
            ins: vec![f.domain_dim()],
            outs: vec![f.codomain_dim()],
            mat: f.clone(),
        }
    }

    /// Constant map `k -> W` with no input legs; `w` is the image of `1`.
    pub fn constant(outs: Vec<usize>, w: &[Scalar]) -> Self {
        let mat = LinMap::from_columns(w.len(), 1, |_| w.to_vec());
        MultilinearMap::new(vec![], outs, mat)
    }

    /// Functional `V -> k` with no output legs; `p` holds its coefficients.
    pub fn functional(dim: usize, p: &[Scalar]) -> Self {
        assert_eq!(p.len(), dim);
        let mat = LinMap::from_fn(1, dim, |_, c| p[c].clone());
        MultilinearMap::new(vec![dim], vec![], mat)
    }

    pub fn identity(dims: &[usize]) -> Self {
        MultilinearMap::new(dims.to_vec(), dims.to_vec(), LinMap::identity(product(dims)))
    }

    /// Builds from a function of (output multi-index, input multi-index).
    pub fn from_fn(
        ins: Vec<usize>,
        outs: Vec<usize>,
        mut f: impl FnMut(&[usize], &[usize]) -> Scalar,
    ) -> Self {
        let mat = LinMap::from_fn(product(&outs), product(&ins), |r, c| {
            f(&unflatten_index(&outs, r), &unflatten_index(&ins, c))
        });
        MultilinearMap::new(ins, outs, mat)
    }

    pub fn ins(&self) -> &[usize] {
        &self.ins
    }

    pub fn outs(&self) -> &[usize] {
        &self.outs
    }

    pub fn as_lin(&self) -> &LinMap {
        &self.mat
    }

    pub fn into_lin(self) -> LinMap {
        self.mat
    }

    /// Reinterprets leg structure without touching entries; the flattened
    /// dimensions must agree.
    pub fn regroup(&self, ins: Vec<usize>, outs: Vec<usize>) -> Self {
        assert_eq!(product(&ins), self.mat.domain_dim(), "regroup input mismatch");
        assert_eq!(product(&outs), self.mat.codomain_dim(), "regroup output mismatch");
        MultilinearMap {
            ins,
            outs,
            mat: self.mat.clone(),
        }
    }

    /// Composition `self . rhs` (apply `rhs` first).
    pub fn compose(&self, rhs: &MultilinearMap) -> MultilinearMap {
        assert_eq!(
            product(&self.ins),
            product(&rhs.outs),
            "composition mismatch: {:?} after {:?}",
            self.ins,
            rhs.outs
        );
        MultilinearMap {
            ins: rhs.ins.clone(),
            outs: self.outs.clone(),
            mat: self.mat.compose(&rhs.mat),
        }
    }

    /// Pipeline order: `next . self`.
    pub fn then(&self, next: &MultilinearMap) -> MultilinearMap {
        next.compose(self)
    }

    /// Tensor product; legs concatenate and entries multiply Kronecker-style.
    pub fn tensor(&self, rhs: &MultilinearMap) -> MultilinearMap {
        let mut ins = self.ins.clone();
        ins.extend_from_slice(&rhs.ins);
        let mut outs = self.outs.clone();
        outs.extend_from_slice(&rhs.outs);
        MultilinearMap {
            ins,
            outs,
            mat: self.mat.kronecker(&rhs.mat),
        }
    }

    pub fn add(&self, rhs: &MultilinearMap) -> MultilinearMap {
        assert_eq!(self.ins, rhs.ins);
        assert_eq!(self.outs, rhs.outs);
        MultilinearMap {
            ins: self.ins.clone(),
            outs: self.outs.clone(),
            mat: self.mat.add(&rhs.mat),
        }
    }

    pub fn scale(&self, s: &Scalar) -> MultilinearMap {
        MultilinearMap {
            ins: self.ins.clone(),
            outs: self.outs.clone(),
            mat: self.mat.scale(s),
        }
    }

    /// Leg permutation: output leg `j` carries input leg `src_of_out[j]`.
    pub fn permutation(dims: &[usize], src_of_out: &[usize]) -> MultilinearMap {
        assert_eq!(dims.len(), src_of_out.len(), "permutation arity mismatch");
        let mut seen = vec![false; dims.len()];
        for &s in src_of_out {
            assert!(!seen[s], "not a permutation");
            seen[s] = true;
        }
        let outs: Vec<usize> = src_of_out.iter().map(|&s| dims[s]).collect();
        let cols = product(dims);
        let mat = LinMap::from_sparse_columns(cols, cols, |c| {
            let idx = unflatten_index(dims, c);
            let out_idx: Vec<usize> = src_of_out.iter().map(|&s| idx[s]).collect();
            vec![(flatten_index(&outs, &out_idx), crate::scalar::one())]
        });
        MultilinearMap::new(dims.to_vec(), outs, mat)
    }

    /// `(f (x) g) . self` without materializing the Kronecker product; used
    /// where both factors are multiplication tensors and the product would be
    /// dense.
    pub fn then_tensor_pair(&self, f: &MultilinearMap, g: &MultilinearMap) -> MultilinearMap {
        let mut outs = f.outs.to_vec();
        outs.extend_from_slice(&g.outs);
        MultilinearMap {
            ins: self.ins.clone(),
            outs,
            mat: LinMap::kron_compose(f.as_lin(), g.as_lin(), &self.mat),
        }
    }

    /// Applies `f` on leg `i` of a space with the given leg dimensions,
    /// identity elsewhere.
    pub fn on_leg(dims: &[usize], i: usize, f: &MultilinearMap) -> MultilinearMap {
        assert_eq!(f.ins.len(), 1, "on_leg wants a single-input-leg map");
        assert_eq!(f.ins[0], dims[i], "leg dimension mismatch");
        let mut parts: Vec<MultilinearMap> = Vec::new();
        for (k, &d) in dims.iter().enumerate() {
            if k == i {
                parts.push(f.clone());
            } else {
                parts.push(MultilinearMap::identity(&[d]));
            }
        }
        tensor_all(&parts.iter().collect::<Vec<_>>())
    }

    /// Image of a basis multi-index, as a dense coefficient vector of the
    /// flattened codomain.
    pub fn eval_basis(&self, idx: &[usize]) -> Vec<Scalar> {
        let c = flatten_index(&self.ins, idx);
        self.mat.column(c)
    }

    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        self.mat.apply(v)
    }
}

impl fmt::Debug for MultilinearMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultilinearMap {:?} -> {:?} {:?}", self.ins, self.outs, self.mat)
    }
}

/// Tensor product of a sequence of maps (empty product is the scalar identity).
pub fn tensor_all(parts: &[&MultilinearMap]) -> MultilinearMap {
    let mut acc = MultilinearMap::identity(&[]);
    for p in parts {
        acc = acc.tensor(p);
    }
    acc
}

/// Tensor of two linear maps as a flattened linear map.
pub fn tensor_lin(f: &LinMap, g: &LinMap) -> LinMap {
    f.kronecker(g)
}

/// First input column where the two maps differ, with both evaluated sides.
pub fn first_mismatch(
    lhs: &MultilinearMap,
    rhs: &MultilinearMap,
) -> Option<(Vec<usize>, Vec<Scalar>, Vec<Scalar>)> {
    assert_eq!(product(lhs.ins()), product(rhs.ins()), "mismatched domains");
    assert_eq!(product(lhs.outs()), product(rhs.outs()), "mismatched codomains");
    let cols = product(lhs.ins());
    for c in 0..cols {
        let a = lhs.mat.column(c);
        let b = rhs.mat.column(c);
        if a != b {
            return Some((unflatten_index(lhs.ins(), c), a, b));
        }
    }
    None
}

/// Checks whether a square multilinear map is invertible.
pub fn invert(map: &MultilinearMap) -> Result<MultilinearMap> {
    if map.as_lin().domain_dim() != map.as_lin().codomain_dim() {
        return Err(Error::DimMismatch("only square maps can be inverted".into()));
    }
    let inv = map.as_lin().inverse()?;
    Ok(MultilinearMap::new(map.outs().to_vec(), map.ins().to_vec(), inv))
}
