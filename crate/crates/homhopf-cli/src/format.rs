//! Versioned JSON structure files.
//!
//! Every structure is a JSON document with a `format_version`, a `kind`, basis
//! names, and tensors given as sparse entry lists `[indices..., "p/q"]` with
//! output legs first. Entries are kept sorted lexicographically by index tuple
//! and scalars are written in lowest terms, so export is deterministic and an
//! export-import-export cycle is byte-identical. Carrier references are either
//! a path (relative to the referring file) or an inline document.

use std::path::{Path, PathBuf};
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use homhopf::hopf::{HomAlgebra, HomHopfAlgebra, HopfAutomorphism};
use homhopf::mat::LinMap;
use homhopf::multilinear::MultilinearMap;
use homhopf::rep::{BicomoduleAlgebra, HomComodule, HomModule};
use homhopf::scalar::{parse_scalar, render_scalar, Scalar};
use homhopf::yd::{AutPair, YDModule};

pub const FORMAT_VERSION: u32 = 1;

/// One sparse tensor entry: indices (output legs first) and a coefficient.
pub type Entry = (Vec<usize>, String);

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum CarrierRef {
    Path(String),
    Inline(Box<StructureFile>),
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StructureFile {
    pub format_version: u32,
    pub kind: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dimension: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub basis: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub carrier: Option<CarrierRef>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub xi: Option<Vec<Entry>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mult: Option<Vec<Entry>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub unit: Option<Vec<Entry>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub comult: Option<Vec<Entry>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counit: Option<Vec<Entry>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub antipode: Option<Vec<Entry>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub alpha: Option<Vec<Entry>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub beta: Option<Vec<Entry>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub action: Option<Vec<Entry>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub coaction: Option<Vec<Entry>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rho_l: Option<Vec<Entry>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rho_r: Option<Vec<Entry>>,
    /// For `lin-map` and `iso-pair` kinds.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rows: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cols: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub entries: Option<Vec<Entry>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub forward: Option<Vec<Entry>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub backward: Option<Vec<Entry>>,
    /// For `t-coalgebra`: one bundle per stored component and map.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pairs: Option<Vec<PairData>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub components: Option<Vec<ComponentData>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub comults: Option<Vec<IndexedMap2>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub antipodes: Option<Vec<IndexedMap1>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub conjugations: Option<Vec<IndexedMap2>>,
    /// Grade labels where relevant (graded modules).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub grade: Option<i64>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PairData {
    pub alpha: Vec<Entry>,
    pub beta: Vec<Entry>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ComponentData {
    pub xi: Vec<Entry>,
    pub mult: Vec<Entry>,
    pub unit: Vec<Entry>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct IndexedMap1 {
    pub index: usize,
    pub entries: Vec<Entry>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct IndexedMap2 {
    pub index: (usize, usize),
    pub entries: Vec<Entry>,
}

/// CLI-level error with the exit-code class baked in.
#[derive(Debug)]
pub enum CliError {
    /// Parse, shape or input-validation problems (exit 2).
    Input(String),
    /// A delegated structural check failed on otherwise well-formed input
    /// (exit 1).
    Failed(String),
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Input(msg) | CliError::Failed(msg) => write!(f, "{msg}"),
        }
    }
}

impl From<homhopf::Error> for CliError {
    fn from(e: homhopf::Error) -> Self {
        match e {
            homhopf::Error::Precondition(msg) => CliError::Failed(format!("precondition failed: {msg}")),
            other => CliError::Input(other.to_string()),
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;

fn input_err<T>(msg: impl Into<String>) -> CliResult<T> {
    Err(CliError::Input(msg.into()))
}

// ---- tensor <-> entry list conversions -------------------------------------

fn entries_from_lin(m: &LinMap) -> Vec<Entry> {
    let mut out: Vec<Entry> = m
        .iter_entries()
        .map(|(r, c, v)| (vec![r, c], render_scalar(v)))
        .collect();
    out.sort();
    out
}

fn lin_from_entries(rows: usize, cols: usize, entries: &[Entry]) -> CliResult<LinMap> {
    let mut m = LinMap::zero(rows, cols);
    for (idx, coeff) in entries {
        if idx.len() != 2 {
            return input_err(format!("matrix entry needs [row, col], got {idx:?}"));
        }
        let (r, c) = (idx[0], idx[1]);
        if r >= rows || c >= cols {
            return input_err(format!("matrix index ({r},{c}) out of range {rows}x{cols}"));
        }
        m.set(r, c, parse_scalar(coeff)?);
    }
    Ok(m)
}

fn entries_from_mlm(m: &MultilinearMap) -> Vec<Entry> {
    let outs = m.outs().to_vec();
    let ins = m.ins().to_vec();
    let mut out: Vec<Entry> = m
        .as_lin()
        .iter_entries()
        .map(|(r, c, v)| {
            let mut idx = homhopf::multilinear::unflatten_index(&outs, r);
            idx.extend(homhopf::multilinear::unflatten_index(&ins, c));
            (idx, render_scalar(v))
        })
        .collect();
    out.sort();
    out
}

fn mlm_from_entries(ins: Vec<usize>, outs: Vec<usize>, entries: &[Entry]) -> CliResult<MultilinearMap> {
    let rows: usize = outs.iter().product();
    let cols: usize = ins.iter().product();
    let mut m = LinMap::zero(rows, cols);
    let arity = outs.len() + ins.len();
    for (idx, coeff) in entries {
        if idx.len() != arity {
            return input_err(format!("tensor entry needs {arity} indices, got {idx:?}"));
        }
        for (k, (i, d)) in idx.iter().zip(outs.iter().chain(ins.iter())).enumerate() {
            if i >= d {
                return input_err(format!("tensor index {i} at position {k} out of range {d}"));
            }
        }
        let r = homhopf::multilinear::flatten_index(&outs, &idx[..outs.len()]);
        let c = homhopf::multilinear::flatten_index(&ins, &idx[outs.len()..]);
        m.set(r, c, parse_scalar(coeff)?);
    }
    Ok(MultilinearMap::new(ins, outs, m))
}

fn entries_from_vec(v: &[Scalar]) -> Vec<Entry> {
    use num_traits::Zero;
    let mut out: Vec<Entry> = v
        .iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(i, x)| (vec![i], render_scalar(x)))
        .collect();
    out.sort();
    out
}

fn vec_from_entries(dim: usize, entries: &[Entry]) -> CliResult<Vec<Scalar>> {
    let mut v = vec![homhopf::scalar::zero(); dim];
    for (idx, coeff) in entries {
        if idx.len() != 1 {
            return input_err(format!("vector entry needs [index], got {idx:?}"));
        }
        if idx[0] >= dim {
            return input_err(format!("vector index {} out of range {dim}", idx[0]));
        }
        v[idx[0]] = parse_scalar(coeff)?;
    }
    Ok(v)
}

// ---- reading and writing ----------------------------------------------------

pub fn read_file(path: &Path) -> CliResult<StructureFile> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))?;
    let file: StructureFile = serde_json::from_str(&text)
        .map_err(|e| CliError::Input(format!("cannot parse {}: {e}", path.display())))?;
    if file.format_version != FORMAT_VERSION {
        return input_err(format!(
            "unsupported format_version {} in {}",
            file.format_version,
            path.display()
        ));
    }
    Ok(file)
}

pub fn render(file: &StructureFile) -> String {
    let mut text = serde_json::to_string_pretty(file).expect("structure files serialize");
    text.push('\n');
    text
}

pub fn write_file(path: &Path, file: &StructureFile) -> CliResult<()> {
    std::fs::write(path, render(file))
        .map_err(|e| CliError::Input(format!("cannot write {}: {e}", path.display())))
}

fn resolve_carrier(base_dir: &Path, carrier: &Option<CarrierRef>) -> CliResult<(StructureFile, PathBuf)> {
    match carrier {
        None => input_err("missing carrier reference"),
        Some(CarrierRef::Inline(f)) => Ok((f.as_ref().clone(), base_dir.to_path_buf())),
        Some(CarrierRef::Path(p)) => {
            let path = base_dir.join(p);
            let f = read_file(&path)?;
            let dir = path.parent().map(|p| p.to_path_buf()).unwrap_or_default();
            Ok((f, dir))
        }
    }
}

// ---- conversions: hopf ------------------------------------------------------

pub fn hopf_to_file(h: &HomHopfAlgebra) -> StructureFile {
    StructureFile {
        format_version: FORMAT_VERSION,
        kind: "hopf".into(),
        dimension: Some(h.dim),
        basis: Some(h.basis.clone()),
        carrier: None,
        xi: Some(entries_from_lin(&h.xi)),
        mult: Some(entries_from_mlm(&h.mult)),
        unit: Some(entries_from_vec(&h.unit)),
        comult: Some(entries_from_mlm(&h.comult)),
        counit: Some(entries_from_vec(&h.counit)),
        antipode: Some(entries_from_lin(&h.antipode)),
        alpha: None,
        beta: None,
        action: None,
        coaction: None,
        rho_l: None,
        rho_r: None,
        rows: None,
        cols: None,
        entries: None,
        forward: None,
        backward: None,
        pairs: None,
        components: None,
        comults: None,
        antipodes: None,
        conjugations: None,
        grade: None,
    }
}

pub fn empty_file(kind: &str) -> StructureFile {
    let mut f = hopf_to_file_placeholder();
    f.kind = kind.into();
    f
}

fn hopf_to_file_placeholder() -> StructureFile {
    StructureFile {
        format_version: FORMAT_VERSION,
        kind: String::new(),
        dimension: None,
        basis: None,
        carrier: None,
        xi: None,
        mult: None,
        unit: None,
        comult: None,
        counit: None,
        antipode: None,
        alpha: None,
        beta: None,
        action: None,
        coaction: None,
        rho_l: None,
        rho_r: None,
        rows: None,
        cols: None,
        entries: None,
        forward: None,
        backward: None,
        pairs: None,
        components: None,
        comults: None,
        antipodes: None,
        conjugations: None,
        grade: None,
    }
}

pub fn hopf_from_file(f: &StructureFile) -> CliResult<HomHopfAlgebra> {
    if f.kind != "hopf" {
        return input_err(format!("expected kind \"hopf\", found {:?}", f.kind));
    }
    let dim = f.dimension.ok_or(CliError::Input("missing dimension".into()))?;
    if dim == 0 {
        return input_err("dimension must be positive");
    }
    let need = |name: &str, o: &Option<Vec<Entry>>| -> CliResult<Vec<Entry>> {
        o.clone().ok_or(CliError::Input(format!("missing field {name}")))
    };
    let xi = lin_from_entries(dim, dim, &need("xi", &f.xi)?)?;
    let mult = mlm_from_entries(vec![dim, dim], vec![dim], &need("mult", &f.mult)?)?;
    let unit = vec_from_entries(dim, &need("unit", &f.unit)?)?;
    let comult = mlm_from_entries(vec![dim], vec![dim, dim], &need("comult", &f.comult)?)?;
    let counit = vec_from_entries(dim, &need("counit", &f.counit)?)?;
    let antipode = lin_from_entries(dim, dim, &need("antipode", &f.antipode)?)?;
    let basis = f.basis.clone().unwrap_or_default();
    HomHopfAlgebra::new(dim, xi, mult, unit, comult, counit, antipode, basis).map_err(Into::into)
}

// ---- conversions: aut-pair, modules, comodules, yd --------------------------

pub fn autpair_to_file(p: &AutPair, carrier: CarrierRef) -> StructureFile {
    let mut f = empty_file("aut-pair");
    f.dimension = Some(p.carrier().dim);
    f.carrier = Some(carrier);
    f.alpha = Some(entries_from_lin(&p.alpha.matrix));
    f.beta = Some(entries_from_lin(&p.beta.matrix));
    f
}

pub fn autpair_from_file(base_dir: &Path, f: &StructureFile) -> CliResult<AutPair> {
    if f.kind != "aut-pair" {
        return input_err(format!("expected kind \"aut-pair\", found {:?}", f.kind));
    }
    let (carrier_file, _) = resolve_carrier(base_dir, &f.carrier)?;
    let hopf = Arc::new(hopf_from_file(&carrier_file)?);
    let d = hopf.dim;
    let alpha = lin_from_entries(d, d, f.alpha.as_deref().unwrap_or_default())?;
    let beta = lin_from_entries(d, d, f.beta.as_deref().unwrap_or_default())?;
    let alpha = HopfAutomorphism::verified(hopf.clone(), alpha, "alpha").map_err(CliError::from)?;
    let beta = HopfAutomorphism::verified(hopf, beta, "beta").map_err(CliError::from)?;
    AutPair::new(alpha, beta).map_err(Into::into)
}

pub fn module_to_file(m: &HomModule, carrier: CarrierRef) -> StructureFile {
    let mut f = empty_file("module");
    f.dimension = Some(m.dim);
    f.carrier = Some(carrier);
    f.xi = Some(entries_from_lin(&m.xi));
    f.action = Some(entries_from_mlm(&m.action));
    f
}

/// Modules are over the algebra part of a `hopf` carrier or over an inline
/// `algebra` document.
pub fn module_from_file(base_dir: &Path, f: &StructureFile) -> CliResult<HomModule> {
    if f.kind != "module" {
        return input_err(format!("expected kind \"module\", found {:?}", f.kind));
    }
    let (carrier_file, _) = resolve_carrier(base_dir, &f.carrier)?;
    let algebra = algebra_from_any(&carrier_file)?;
    let dim = f.dimension.ok_or(CliError::Input("missing dimension".into()))?;
    let xi = lin_from_entries(dim, dim, f.xi.as_deref().unwrap_or_default())?;
    let action = mlm_from_entries(
        vec![algebra.dim, dim],
        vec![dim],
        f.action.as_deref().unwrap_or_default(),
    )?;
    Ok(HomModule::new(algebra, dim, xi, action))
}

pub fn algebra_to_file(a: &HomAlgebra, basis: Option<Vec<String>>) -> StructureFile {
    let mut f = empty_file("algebra");
    f.dimension = Some(a.dim);
    f.basis = basis;
    f.xi = Some(entries_from_lin(&a.xi));
    f.mult = Some(entries_from_mlm(&a.mult));
    f.unit = Some(entries_from_vec(&a.unit));
    f
}

pub fn algebra_from_any(f: &StructureFile) -> CliResult<HomAlgebra> {
    match f.kind.as_str() {
        "hopf" => Ok(hopf_from_file(f)?.algebra()),
        "algebra" => {
            let dim = f.dimension.ok_or(CliError::Input("missing dimension".into()))?;
            let xi = lin_from_entries(dim, dim, f.xi.as_deref().unwrap_or_default())?;
            let mult = mlm_from_entries(vec![dim, dim], vec![dim], f.mult.as_deref().unwrap_or_default())?;
            let unit = vec_from_entries(dim, f.unit.as_deref().unwrap_or_default())?;
            HomAlgebra::new(dim, xi, mult, unit).map_err(Into::into)
        }
        other => input_err(format!("expected an algebra-like carrier, found {other:?}")),
    }
}

pub fn comodule_to_file(m: &HomComodule, carrier: CarrierRef) -> StructureFile {
    let mut f = empty_file("comodule");
    f.dimension = Some(m.dim);
    f.carrier = Some(carrier);
    f.xi = Some(entries_from_lin(&m.xi));
    f.coaction = Some(entries_from_mlm(&m.coaction));
    f
}

pub fn comodule_from_file(base_dir: &Path, f: &StructureFile) -> CliResult<HomComodule> {
    if f.kind != "comodule" {
        return input_err(format!("expected kind \"comodule\", found {:?}", f.kind));
    }
    let (carrier_file, _) = resolve_carrier(base_dir, &f.carrier)?;
    let hopf = hopf_from_file(&carrier_file)?;
    let dim = f.dimension.ok_or(CliError::Input("missing dimension".into()))?;
    let xi = lin_from_entries(dim, dim, f.xi.as_deref().unwrap_or_default())?;
    let coaction = mlm_from_entries(
        vec![dim],
        vec![dim, hopf.dim],
        f.coaction.as_deref().unwrap_or_default(),
    )?;
    Ok(HomComodule::new(hopf.coalgebra(), dim, xi, coaction))
}

pub fn bicomodule_to_file(b: &BicomoduleAlgebra, carrier: CarrierRef) -> StructureFile {
    let mut f = empty_file("bicomodule-algebra");
    f.dimension = Some(b.algebra.dim);
    f.carrier = Some(carrier);
    f.xi = Some(entries_from_lin(&b.algebra.xi));
    f.mult = Some(entries_from_mlm(&b.algebra.mult));
    f.unit = Some(entries_from_vec(&b.algebra.unit));
    f.rho_l = Some(entries_from_mlm(&b.rho_l));
    f.rho_r = Some(entries_from_mlm(&b.rho_r));
    f
}

pub fn bicomodule_from_file(base_dir: &Path, f: &StructureFile) -> CliResult<BicomoduleAlgebra> {
    if f.kind != "bicomodule-algebra" {
        return input_err(format!("expected kind \"bicomodule-algebra\", found {:?}", f.kind));
    }
    let (carrier_file, _) = resolve_carrier(base_dir, &f.carrier)?;
    let hopf = hopf_from_file(&carrier_file)?;
    let dim = f.dimension.ok_or(CliError::Input("missing dimension".into()))?;
    let xi = lin_from_entries(dim, dim, f.xi.as_deref().unwrap_or_default())?;
    let mult = mlm_from_entries(vec![dim, dim], vec![dim], f.mult.as_deref().unwrap_or_default())?;
    let unit = vec_from_entries(dim, f.unit.as_deref().unwrap_or_default())?;
    let algebra = HomAlgebra::new(dim, xi, mult, unit).map_err(CliError::from)?;
    let rho_l = mlm_from_entries(vec![dim], vec![hopf.dim, dim], f.rho_l.as_deref().unwrap_or_default())?;
    let rho_r = mlm_from_entries(vec![dim], vec![dim, hopf.dim], f.rho_r.as_deref().unwrap_or_default())?;
    Ok(BicomoduleAlgebra::new(hopf, algebra, rho_l, rho_r))
}

pub fn yd_to_file(m: &YDModule, carrier: CarrierRef) -> StructureFile {
    let mut f = empty_file("yd-module");
    f.dimension = Some(m.dim);
    f.carrier = Some(carrier);
    f.alpha = Some(entries_from_lin(&m.pair.alpha.matrix));
    f.beta = Some(entries_from_lin(&m.pair.beta.matrix));
    f.xi = Some(entries_from_lin(&m.xi));
    f.action = Some(entries_from_mlm(&m.action));
    f.coaction = Some(entries_from_mlm(&m.coaction));
    f
}

pub fn yd_from_file(base_dir: &Path, f: &StructureFile) -> CliResult<YDModule> {
    if f.kind != "yd-module" {
        return input_err(format!("expected kind \"yd-module\", found {:?}", f.kind));
    }
    let (carrier_file, _) = resolve_carrier(base_dir, &f.carrier)?;
    let hopf = Arc::new(hopf_from_file(&carrier_file)?);
    let d = hopf.dim;
    let alpha = lin_from_entries(d, d, f.alpha.as_deref().unwrap_or_default())?;
    let beta = lin_from_entries(d, d, f.beta.as_deref().unwrap_or_default())?;
    let alpha = HopfAutomorphism::verified(hopf.clone(), alpha, "alpha").map_err(CliError::from)?;
    let beta = HopfAutomorphism::verified(hopf, beta, "beta").map_err(CliError::from)?;
    let pair = AutPair::new(alpha, beta).map_err(CliError::from)?;
    let dim = f.dimension.ok_or(CliError::Input("missing dimension".into()))?;
    let xi = lin_from_entries(dim, dim, f.xi.as_deref().unwrap_or_default())?;
    let action = mlm_from_entries(vec![d, dim], vec![dim], f.action.as_deref().unwrap_or_default())?;
    let coaction = mlm_from_entries(vec![dim], vec![dim, d], f.coaction.as_deref().unwrap_or_default())?;
    Ok(YDModule::new(pair, dim, xi, action, coaction))
}

pub fn linmap_to_file(m: &LinMap) -> StructureFile {
    let mut f = empty_file("lin-map");
    f.rows = Some(m.codomain_dim());
    f.cols = Some(m.domain_dim());
    f.entries = Some(entries_from_lin(m));
    f
}

pub fn isopair_to_file(forward: &LinMap, backward: &LinMap) -> StructureFile {
    let mut f = empty_file("iso-pair");
    f.rows = Some(forward.codomain_dim());
    f.cols = Some(forward.domain_dim());
    f.forward = Some(entries_from_lin(forward));
    f.backward = Some(entries_from_lin(backward));
    f
}

pub fn tcoalgebra_to_file(mhd: &homhopf::tcoalg::MhdCoalgebra, carrier: CarrierRef) -> StructureFile {
    let mut f = empty_file("t-coalgebra");
    f.carrier = Some(carrier);
    f.dimension = Some(mhd.hopf.dim * mhd.hopf.dim);
    f.pairs = Some(
        mhd.t
            .index_set
            .iter()
            .map(|p| PairData {
                alpha: entries_from_lin(&p.alpha.matrix),
                beta: entries_from_lin(&p.beta.matrix),
            })
            .collect(),
    );
    f.components = Some(
        mhd.t
            .components
            .iter()
            .map(|c| ComponentData {
                xi: entries_from_lin(&c.xi),
                mult: entries_from_mlm(&c.mult),
                unit: entries_from_vec(&c.unit),
            })
            .collect(),
    );
    let mut comults: Vec<IndexedMap2> = mhd
        .t
        .comults
        .iter()
        .map(|(k, m)| IndexedMap2 {
            index: *k,
            entries: entries_from_mlm(m),
        })
        .collect();
    comults.sort_by_key(|x| x.index);
    f.comults = Some(comults);
    f.counit = Some(entries_from_vec(&mhd.t.counit));
    let mut antipodes: Vec<IndexedMap1> = mhd
        .t
        .antipodes
        .iter()
        .map(|(k, m)| IndexedMap1 {
            index: *k,
            entries: entries_from_lin(m),
        })
        .collect();
    antipodes.sort_by_key(|x| x.index);
    f.antipodes = Some(antipodes);
    let mut conj: Vec<IndexedMap2> = mhd
        .t
        .conjugations
        .iter()
        .map(|(k, m)| IndexedMap2 {
            index: *k,
            entries: entries_from_lin(m),
        })
        .collect();
    conj.sort_by_key(|x| x.index);
    f.conjugations = Some(conj);
    f
}
