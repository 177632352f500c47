//! File loading and the small spec languages for modules and σ.
//!
//! Every loader annotates failures with the file path (and, for JSON syntax
//! errors, the line and column serde reports) so the caller can print one
//! message and exit with the input-error code.

use std::fs;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use grcoh_core::algebra::{path_algebra, Algebra, AlgebraRef, Quiver};
use grcoh_core::artheory::build_theta;
use grcoh_core::graded::{GradedFreeModule, GradedMap};
use grcoh_core::module::{projective, simple_top, Module};
use grcoh_core::matrix::Vector;
use grcoh_core::tower::{make_instance, InstanceKind, TensorTower};
use grcoh_core::FieldSpec;
use serde_json::Value;

/// Input or validation failure; always reported on stderr with exit code 2.
#[derive(Debug)]
pub struct InputError(pub String);

impl std::fmt::Display for InputError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl From<grcoh_core::Error> for InputError {
    fn from(e: grcoh_core::Error) -> Self {
        InputError(e.to_string())
    }
}

pub fn read_json(path: &Path) -> Result<Value, InputError> {
    let text = fs::read_to_string(path)
        .map_err(|e| InputError(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| InputError(format!("{}: {e}", path.display())))
}

fn annotate<T>(path: &Path, r: Result<T, grcoh_core::Error>) -> Result<T, InputError> {
    r.map_err(|e| InputError(format!("{}: {e}", path.display())))
}

pub fn parse_field(s: &str) -> Result<FieldSpec, InputError> {
    if s == "Q" || s == "q" {
        return Ok(FieldSpec::Rationals);
    }
    let digits = s.strip_prefix('F').or_else(|| s.strip_prefix('f')).unwrap_or(s);
    let p: u64 = digits
        .parse()
        .map_err(|_| InputError(format!("unrecognized field {s:?}: expected Q or F<p>")))?;
    Ok(FieldSpec::prime(p)?)
}

/// An algebra file carries its own field; a quiver file takes the field and
/// truncation data from the command line.
pub fn load_algebra(path: &Path, field: FieldSpec) -> Result<AlgebraRef, InputError> {
    let v = read_json(path)?;
    if v.get("vertices").is_some() {
        let quiver = annotate(path, Quiver::from_json(&v))?;
        return annotate(path, path_algebra(&quiver, field));
    }
    if v.get("basis").is_some() {
        return annotate(path, Algebra::from_json(&v));
    }
    Err(InputError(format!(
        "{}: expected a quiver ({{\"vertices\", ...}}) or an algebra ({{\"basis\", ...}})",
        path.display()
    )))
}

/// Module files name their algebra; the command already loaded it, so the
/// action matrices are interpreted over that instance and the file's own
/// algebra path is not followed.
pub fn load_module(path: &Path, algebra: &AlgebraRef) -> Result<Module, InputError> {
    let v = read_json(path)?;
    annotate(path, Module::from_json(&v, algebra))
}

/// Right modules: `regular`, `dual`, `simple:<c>`, `projective:<c>`, or a
/// module file path.
pub fn module_from_spec(
    spec: &str,
    algebra: &AlgebraRef,
    dir: &Path,
) -> Result<Module, InputError> {
    if spec == "regular" {
        return Ok(Module::regular(algebra));
    }
    if spec == "dual" {
        return Ok(Module::dual_regular(algebra));
    }
    if let Some(c) = spec.strip_prefix("simple:") {
        let c = parse_index(c, algebra.idempotents.len(), spec)?;
        return Ok(simple_top(algebra, c)?);
    }
    if let Some(c) = spec.strip_prefix("projective:") {
        let c = parse_index(c, algebra.idempotents.len(), spec)?;
        return Ok(projective(algebra, c).0);
    }
    load_module(&dir.join(spec), algebra)
}

fn parse_index(s: &str, count: usize, spec: &str) -> Result<usize, InputError> {
    let c: usize = s
        .parse()
        .map_err(|_| InputError(format!("bad idempotent index in {spec:?}")))?;
    if c >= count {
        return Err(InputError(format!(
            "idempotent index {c} out of range (the algebra has {count})"
        )));
    }
    Ok(c)
}

/// Bimodules for towers: `free:<r>`, `bar`, `top`, `theta` (optionally
/// `theta:<n>`), or a module file path that carries a left action.
pub fn sigma_from_spec(
    spec: &str,
    algebra: &AlgebraRef,
    dir: &Path,
    gldim_bound: usize,
) -> Result<Module, InputError> {
    if let Some(r) = spec.strip_prefix("free:") {
        let r: usize = r
            .parse()
            .map_err(|_| InputError(format!("bad rank in {spec:?}")))?;
        return Ok(make_instance(InstanceKind::Free(r), algebra)?);
    }
    if spec == "bar" {
        return Ok(make_instance(InstanceKind::Bar, algebra)?);
    }
    if spec == "top" {
        let rad = algebra.radical()?.clone();
        return Ok(Module::regular(algebra).quotient(&rad)?.0);
    }
    if spec == "theta" || spec.starts_with("theta:") {
        let n = match spec.strip_prefix("theta:") {
            Some(n) => n
                .parse()
                .map_err(|_| InputError(format!("bad degree in {spec:?}")))?,
            None => 1,
        };
        return Ok(build_theta(algebra, n, gldim_bound)?.theta);
    }
    let m = load_module(&dir.join(spec), algebra)?;
    if !m.is_bimodule() {
        return Err(InputError(format!(
            "{}: σ must carry a left action (\"left_action\")",
            dir.join(spec).display()
        )));
    }
    Ok(m)
}

/// Tower description read from a graded map file; the tower itself is built
/// by the caller so that a failed purity gate stays a structured error.
pub struct MapHeader {
    pub path: PathBuf,
    pub json: Value,
    pub algebra: AlgebraRef,
    pub sigma: Module,
    pub cap: usize,
}

/// Graded map files embed their tower: paths inside the file resolve
/// relative to the file's own directory.
pub fn load_map_header(
    path: &Path,
    field: FieldSpec,
    cap_override: Option<usize>,
    gldim_bound: usize,
) -> Result<MapHeader, InputError> {
    let v = read_json(path)?;
    let dir = path.parent().unwrap_or(Path::new("")).to_path_buf();
    let bad = |msg: &str| InputError(format!("{}: parse error: {msg}", path.display()));

    let tw = v.get("tower").ok_or_else(|| bad("missing \"tower\""))?;
    let algebra_spec = tw
        .get("algebra")
        .and_then(Value::as_str)
        .ok_or_else(|| bad("missing \"tower.algebra\""))?;
    let algebra = load_algebra(&dir.join(algebra_spec), field)?;
    let sigma_spec = tw
        .get("sigma")
        .and_then(Value::as_str)
        .ok_or_else(|| bad("missing \"tower.sigma\""))?;
    let sigma = sigma_from_spec(sigma_spec, &algebra, &dir, gldim_bound)?;
    let file_cap = tw
        .get("cap")
        .and_then(Value::as_u64)
        .ok_or_else(|| bad("missing \"tower.cap\""))? as usize;
    let cap = file_cap.max(cap_override.unwrap_or(0));
    Ok(MapHeader {
        path: path.to_path_buf(),
        json: v,
        algebra,
        sigma,
        cap,
    })
}

/// Fill the entry table of a graded map over an already built tower.
pub fn build_map(h: &MapHeader, t: &Arc<TensorTower>) -> Result<GradedMap, InputError> {
    let path = &h.path;
    let v = &h.json;
    let bad = |msg: &str| InputError(format!("{}: parse error: {msg}", path.display()));

    let degrees = |key: &str| -> Result<Vec<i64>, InputError> {
        v.get(key)
            .and_then(Value::as_array)
            .ok_or_else(|| bad(&format!("missing \"{key}\"")))?
            .iter()
            .map(|d| d.as_i64().ok_or_else(|| bad(&format!("bad degree in \"{key}\""))))
            .collect()
    };
    let source_degrees = degrees("source_degrees")?;
    let target_degrees = degrees("target_degrees")?;

    let f = h.algebra.field;
    let mut entries: Vec<Vec<Option<Vector>>> = (0..target_degrees.len())
        .map(|j| {
            (0..source_degrees.len())
                .map(|i| {
                    let diff = source_degrees[i] - target_degrees[j];
                    (diff >= 0).then(|| vec![f.zero(); t.dim(diff as usize)])
                })
                .collect()
        })
        .collect();
    for (pos, e) in v
        .get("entries")
        .and_then(Value::as_array)
        .ok_or_else(|| bad("missing \"entries\""))?
        .iter()
        .enumerate()
    {
        let row = e
            .as_array()
            .filter(|r| r.len() == 4)
            .ok_or_else(|| bad(&format!("entry {pos} is not [j, i, power, coords]")))?;
        let j = row[0].as_u64().ok_or_else(|| bad(&format!("entry {pos}: bad j")))? as usize;
        let i = row[1].as_u64().ok_or_else(|| bad(&format!("entry {pos}: bad i")))? as usize;
        let power = row[2]
            .as_i64()
            .ok_or_else(|| bad(&format!("entry {pos}: bad power")))?;
        if j >= target_degrees.len() || i >= source_degrees.len() {
            return Err(bad(&format!("entry {pos}: position ({j},{i}) out of range")));
        }
        if power != source_degrees[i] - target_degrees[j] {
            return Err(bad(&format!(
                "entry {pos}: power {power} disagrees with the degree difference {}",
                source_degrees[i] - target_degrees[j]
            )));
        }
        let coords = row[3]
            .as_array()
            .ok_or_else(|| bad(&format!("entry {pos}: bad coords")))?
            .iter()
            .map(|c| f.scalar_from_json(c))
            .collect::<Result<Vector, _>>()
            .map_err(|e| bad(&format!("entry {pos}: {e}")))?;
        if coords.len() != t.dim(power as usize) {
            return Err(bad(&format!(
                "entry {pos}: expected {} coordinates for σ^{power}",
                t.dim(power as usize)
            )));
        }
        entries[j][i] = Some(coords);
    }

    let source = GradedFreeModule::new(Arc::clone(t), source_degrees);
    let target = GradedFreeModule::new(Arc::clone(t), target_degrees);
    annotate(path, GradedMap::new(source, target, entries))
}
