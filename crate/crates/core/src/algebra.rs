//! Finite dimensional algebras given by structure constants, optionally
//! presented by a quiver with monomial relations.
//!
//! Path composition reads left to right: p·q means "p then q", so eᵢ·Λ is
//! spanned by the paths starting at vertex i. Elements are row vectors in the
//! chosen basis; `right_mult(j)` is the matrix of x ↦ x·bⱼ and `left_mult(j)`
//! the matrix of x ↦ bⱼ·x, both acting on row vectors from the right.

use crate::error::Error;
use crate::field::{FieldSpec, Scalar};
use crate::matrix::{is_zero_row, Matrix, Subspace, Vector};
use serde_json::{json, Value};
use std::sync::Arc;

/// Default ceiling on enumerated paths before a presentation is rejected.
pub const PATH_CAP: usize = 4096;

#[derive(Debug, Clone, PartialEq)]
pub struct Quiver {
    pub vertices: Vec<String>,
    /// (name, source vertex index, target vertex index)
    pub arrows: Vec<(String, usize, usize)>,
    /// monomial relations as arrow index sequences, length ≥ 2
    pub relations: Vec<Vec<usize>>,
}

impl Quiver {
    pub fn new(
        vertices: Vec<String>,
        arrows: Vec<(String, String, String)>,
        relations: Vec<Vec<String>>,
    ) -> Result<Self, Error> {
        let vidx = |name: &str| {
            vertices
                .iter()
                .position(|v| v == name)
                .ok_or_else(|| Error::Validation(format!("unknown vertex {name:?}")))
        };
        let mut arr = Vec::with_capacity(arrows.len());
        for (name, s, t) in arrows {
            arr.push((name, vidx(&s)?, vidx(&t)?));
        }
        let aidx = |name: &str| {
            arr.iter()
                .position(|(n, _, _)| n == name)
                .ok_or_else(|| Error::Validation(format!("unknown arrow {name:?}")))
        };
        let mut rels = Vec::with_capacity(relations.len());
        for rel in relations {
            if rel.len() < 2 {
                return Err(Error::Validation(
                    "relations must be paths of length at least 2".into(),
                ));
            }
            let seq = rel.iter().map(|n| aidx(n)).collect::<Result<Vec<_>, _>>()?;
            for w in seq.windows(2) {
                if arr[w[0]].2 != arr[w[1]].1 {
                    return Err(Error::Validation(format!(
                        "relation {rel:?} is not a composable path"
                    )));
                }
            }
            rels.push(seq);
        }
        Ok(Quiver {
            vertices,
            arrows: arr,
            relations: rels,
        })
    }

    pub fn from_json(v: &Value) -> Result<Self, Error> {
        let obj = v
            .as_object()
            .ok_or_else(|| Error::Parse("quiver file must be a JSON object".into()))?;
        let id_string = |x: &Value| match x {
            Value::String(s) => Ok(s.clone()),
            Value::Number(n) => Ok(n.to_string()),
            other => Err(Error::Parse(format!("expected identifier, got {other}"))),
        };
        let vertices = obj
            .get("vertices")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Parse("missing \"vertices\" array".into()))?
            .iter()
            .map(id_string)
            .collect::<Result<Vec<_>, _>>()?;
        let mut arrows = Vec::new();
        for a in obj
            .get("arrows")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Parse("missing \"arrows\" array".into()))?
        {
            let t = a
                .as_array()
                .filter(|t| t.len() == 3)
                .ok_or_else(|| Error::Parse(format!("arrow {a} must be [name, src, tgt]")))?;
            arrows.push((id_string(&t[0])?, id_string(&t[1])?, id_string(&t[2])?));
        }
        let mut relations = Vec::new();
        if let Some(rels) = obj.get("relations").and_then(Value::as_array) {
            for r in rels {
                let seq = r
                    .as_array()
                    .ok_or_else(|| Error::Parse(format!("relation {r} must be an array")))?
                    .iter()
                    .map(id_string)
                    .collect::<Result<Vec<_>, _>>()?;
                relations.push(seq);
            }
        }
        Quiver::new(vertices, arrows, relations)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "vertices": self.vertices,
            "arrows": self
                .arrows
                .iter()
                .map(|(n, s, t)| json!([n, self.vertices[*s], self.vertices[*t]]))
                .collect::<Vec<_>>(),
            "relations": self
                .relations
                .iter()
                .map(|r| r.iter().map(|&a| self.arrows[a].0.clone()).collect::<Vec<_>>())
                .collect::<Vec<_>>(),
        })
    }

    /// Reverse all arrows; relations reverse their composition order.
    pub fn reversed(&self) -> Quiver {
        Quiver {
            vertices: self.vertices.clone(),
            arrows: self
                .arrows
                .iter()
                .map(|(n, s, t)| (n.clone(), *t, *s))
                .collect(),
            relations: self
                .relations
                .iter()
                .map(|r| r.iter().rev().copied().collect())
                .collect(),
        }
    }
}

/// A basis path in the quiver: start vertex plus arrow indices.
#[derive(Debug, Clone, PartialEq)]
pub struct BasisPath {
    pub start: usize,
    pub end: usize,
    pub arrows: Vec<usize>,
}

#[derive(Debug)]
pub struct Algebra {
    pub field: FieldSpec,
    pub dim: usize,
    pub basis_names: Vec<String>,
    pub unit: Vector,
    pub idempotents: Vec<Vector>,
    /// structure constants: mult[i][j] = coordinates of bᵢ·bⱼ
    mult: Vec<Vec<Vector>>,
    pub quiver: Option<Quiver>,
    /// basis index → path, for quiver-presented algebras
    pub paths: Option<Vec<BasisPath>>,
    right_mats: Vec<Matrix>,
    left_mats: Vec<Matrix>,
    /// None when the radical is not computable (positive characteristic
    /// without a quiver presentation)
    radical: Option<Subspace>,
}

pub type AlgebraRef = Arc<Algebra>;

impl Algebra {
    /// Validate the axioms and precompute regular action matrices and the
    /// radical. Structure constants are given as (i, j, coords) triples;
    /// omitted products are zero.
    pub fn new(
        field: FieldSpec,
        basis_names: Vec<String>,
        unit: Vector,
        idempotents: Vec<Vector>,
        mult_entries: Vec<(usize, usize, Vector)>,
        quiver: Option<Quiver>,
        paths: Option<Vec<BasisPath>>,
    ) -> Result<AlgebraRef, Error> {
        let dim = basis_names.len();
        if dim == 0 {
            return Err(Error::Validation("empty basis".into()));
        }
        if unit.len() != dim {
            return Err(Error::Validation("unit coordinate length mismatch".into()));
        }
        let mut mult = vec![vec![vec![field.zero(); dim]; dim]; dim];
        for (i, j, coords) in mult_entries {
            if i >= dim || j >= dim || coords.len() != dim {
                return Err(Error::Validation(format!(
                    "structure constant entry ({i},{j}) out of range"
                )));
            }
            mult[i][j] = coords;
        }

        let right_mats: Vec<Matrix> = (0..dim)
            .map(|j| Matrix::from_fn(field, dim, dim, |i, k| mult[i][j][k].clone()))
            .collect();
        let left_mats: Vec<Matrix> = (0..dim)
            .map(|j| Matrix::from_fn(field, dim, dim, |m, k| mult[j][m][k].clone()))
            .collect();

        let alg = Algebra {
            field,
            dim,
            basis_names,
            unit,
            idempotents,
            mult,
            quiver,
            paths,
            right_mats,
            left_mats,
            radical: None,
        };
        alg.validate()?;
        let radical = alg.compute_radical();
        Ok(Arc::new(Algebra { radical, ..alg }))
    }

    fn validate(&self) -> Result<(), Error> {
        let f = self.field;
        let dim = self.dim;
        // unit law on basis elements
        for i in 0..dim {
            let mut e = vec![f.zero(); dim];
            e[i] = f.one();
            if self.mult_elems(&self.unit, &e) != e || self.mult_elems(&e, &self.unit) != e {
                return Err(Error::Validation(format!(
                    "unit law fails on basis element {}",
                    self.basis_names[i]
                )));
            }
        }
        // associativity on all basis triples
        for i in 0..dim {
            for j in 0..dim {
                let ij = self.mult[i][j].clone();
                for k in 0..dim {
                    let mut e = vec![f.zero(); dim];
                    e[k] = f.one();
                    let left = self.mult_elems(&ij, &e);
                    let right = self.mult_elems(
                        &{
                            let mut ei = vec![f.zero(); dim];
                            ei[i] = f.one();
                            ei
                        },
                        &self.mult[j][k],
                    );
                    if left != right {
                        return Err(Error::Validation(format!(
                            "associativity fails at triple ({}, {}, {})",
                            self.basis_names[i], self.basis_names[j], self.basis_names[k]
                        )));
                    }
                }
            }
        }
        // idempotent axioms
        if self.idempotents.is_empty() {
            return Err(Error::Validation("no idempotents given".into()));
        }
        let mut total = vec![f.zero(); dim];
        for (a, ea) in self.idempotents.iter().enumerate() {
            if ea.len() != dim {
                return Err(Error::Validation("idempotent length mismatch".into()));
            }
            for (b, eb) in self.idempotents.iter().enumerate() {
                let prod = self.mult_elems(ea, eb);
                let expect = if a == b {
                    ea.clone()
                } else {
                    vec![f.zero(); dim]
                };
                if prod != expect {
                    return Err(Error::Validation(format!(
                        "idempotents {a} and {b} are not orthogonal idempotents"
                    )));
                }
            }
            total = crate::matrix::add_rows(f, &total, ea);
        }
        if total != self.unit {
            return Err(Error::Validation("idempotents do not sum to the unit".into()));
        }
        Ok(())
    }

    /// Multiply two elements given as coordinate rows.
    pub fn mult_elems(&self, x: &[Scalar], y: &[Scalar]) -> Vector {
        let f = self.field;
        let mut out = vec![f.zero(); self.dim];
        for (i, xi) in x.iter().enumerate() {
            if f.is_zero(xi) {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if f.is_zero(yj) {
                    continue;
                }
                let c = f.mul(xi, yj);
                for (k, t) in self.mult[i][j].iter().enumerate() {
                    if !f.is_zero(t) {
                        out[k] = f.add(&out[k], &f.mul(&c, t));
                    }
                }
            }
        }
        out
    }

    pub fn basis_product(&self, i: usize, j: usize) -> &Vector {
        &self.mult[i][j]
    }

    /// Matrix of x ↦ x·bⱼ on row vectors.
    pub fn right_mult(&self, j: usize) -> &Matrix {
        &self.right_mats[j]
    }

    /// Matrix of x ↦ bⱼ·x on row vectors.
    pub fn left_mult(&self, j: usize) -> &Matrix {
        &self.left_mats[j]
    }

    /// Matrix of x ↦ x·u for an arbitrary element u.
    pub fn right_mult_of(&self, u: &[Scalar]) -> Matrix {
        self.combine(u, &self.right_mats)
    }

    /// Matrix of x ↦ u·x for an arbitrary element u.
    pub fn left_mult_of(&self, u: &[Scalar]) -> Matrix {
        self.combine(u, &self.left_mats)
    }

    fn combine(&self, u: &[Scalar], mats: &[Matrix]) -> Matrix {
        let f = self.field;
        let mut out = Matrix::zero(f, self.dim, self.dim);
        for (j, c) in u.iter().enumerate() {
            if f.is_zero(c) {
                continue;
            }
            out = out.add(&mats[j].scale(c));
        }
        out
    }

    pub fn basis_elem(&self, i: usize) -> Vector {
        let mut e = vec![self.field.zero(); self.dim];
        e[i] = self.field.one();
        e
    }

    /// The Jacobson radical. Quiver presentations use the arrow ideal;
    /// structure-constant algebras over the rationals use the trace form.
    fn compute_radical(&self) -> Option<Subspace> {
        let f = self.field;
        if let Some(paths) = &self.paths {
            let rows = paths
                .iter()
                .enumerate()
                .filter(|(_, p)| !p.arrows.is_empty())
                .map(|(i, _)| self.basis_elem(i))
                .collect();
            return Some(Subspace::from_rows(f, self.dim, rows));
        }
        if f == FieldSpec::Rationals {
            // radical of the symmetric form (x, y) ↦ tr(right mult by xy)
            let gram = Matrix::from_fn(f, self.dim, self.dim, |i, j| {
                let prod = &self.mult[i][j];
                let mut t = f.zero();
                for (k, c) in prod.iter().enumerate() {
                    if !f.is_zero(c) {
                        let mut diag = f.zero();
                        for m in 0..self.dim {
                            diag = f.add(&diag, self.right_mats[k].get(m, m));
                        }
                        t = f.add(&t, &f.mul(c, &diag));
                    }
                }
                t
            });
            return Some(gram.row_kernel());
        }
        None
    }

    pub fn radical(&self) -> Result<&Subspace, Error> {
        self.radical.as_ref().ok_or(Error::RadicalUnavailable)
    }

    /// Span of {m·r : m basis of sub, r basis of radical} inside the regular
    /// module, given by right-multiplication matrices of an action.
    pub fn radical_of_action(&self, dim: usize, action: &[Matrix]) -> Result<Subspace, Error> {
        let rad = self.radical()?;
        let f = self.field;
        let mut rows = Vec::new();
        for r in 0..rad.dim() {
            let mat = self.combine_action(rad.basis.row(r), action);
            for i in 0..dim {
                rows.push(mat.row_vec(i));
            }
        }
        Ok(Subspace::from_rows(f, dim, rows))
    }

    /// Σ uⱼ · action[j] for a coefficient row u over the algebra basis.
    pub fn combine_action(&self, u: &[Scalar], action: &[Matrix]) -> Matrix {
        let f = self.field;
        let n = action[0].rows;
        let mut out = Matrix::zero(f, n, action[0].cols);
        for (j, c) in u.iter().enumerate() {
            if f.is_zero(c) {
                continue;
            }
            out = out.add(&action[j].scale(c));
        }
        out
    }

    /// The opposite algebra: products reversed, quiver arrows flipped.
    pub fn opposite(&self) -> Result<AlgebraRef, Error> {
        let mut entries = Vec::new();
        for i in 0..self.dim {
            for j in 0..self.dim {
                if !is_zero_row(self.field, &self.mult[j][i]) {
                    entries.push((i, j, self.mult[j][i].clone()));
                }
            }
        }
        let paths = self.paths.as_ref().map(|ps| {
            ps.iter()
                .map(|p| BasisPath {
                    start: p.end,
                    end: p.start,
                    arrows: p.arrows.iter().rev().copied().collect(),
                })
                .collect()
        });
        Algebra::new(
            self.field,
            self.basis_names.clone(),
            self.unit.clone(),
            self.idempotents.clone(),
            entries,
            self.quiver.as_ref().map(|q| q.reversed()),
            paths,
        )
    }

    pub fn to_json(&self) -> Value {
        let f = self.field;
        let coords = |v: &Vector| {
            v.iter()
                .map(|x| f.scalar_to_json(x))
                .collect::<Vec<Value>>()
        };
        let mut mult = Vec::new();
        for i in 0..self.dim {
            for j in 0..self.dim {
                if !is_zero_row(f, &self.mult[i][j]) {
                    mult.push(json!([i, j, coords(&self.mult[i][j])]));
                }
            }
        }
        json!({
            "field": self.field,
            "basis": self.basis_names,
            "unit": coords(&self.unit),
            "idempotents": self.idempotents.iter().map(coords).collect::<Vec<_>>(),
            "mult": mult,
        })
    }

    pub fn from_json(v: &Value) -> Result<AlgebraRef, Error> {
        let obj = v
            .as_object()
            .ok_or_else(|| Error::Parse("algebra file must be a JSON object".into()))?;
        let field: FieldSpec = serde_json::from_value(
            obj.get("field")
                .cloned()
                .ok_or_else(|| Error::Parse("missing \"field\"".into()))?,
        )?;
        if let FieldSpec::Fp(p) = field {
            FieldSpec::prime(p)?;
        }
        let basis: Vec<String> = serde_json::from_value(
            obj.get("basis")
                .cloned()
                .ok_or_else(|| Error::Parse("missing \"basis\"".into()))?,
        )?;
        let dim = basis.len();
        let vec_from = |x: &Value| -> Result<Vector, Error> {
            let arr = x
                .as_array()
                .ok_or_else(|| Error::Parse(format!("expected coordinate array, got {x}")))?;
            if arr.len() != dim {
                return Err(Error::Parse(format!(
                    "coordinate array has length {}, expected {dim}",
                    arr.len()
                )));
            }
            arr.iter().map(|s| field.scalar_from_json(s)).collect()
        };
        let unit = vec_from(
            obj.get("unit")
                .ok_or_else(|| Error::Parse("missing \"unit\"".into()))?,
        )?;
        let idempotents = obj
            .get("idempotents")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Parse("missing \"idempotents\"".into()))?
            .iter()
            .map(vec_from)
            .collect::<Result<Vec<_>, _>>()?;
        let mut entries = Vec::new();
        for e in obj
            .get("mult")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Parse("missing \"mult\"".into()))?
        {
            let t = e
                .as_array()
                .filter(|t| t.len() == 3)
                .ok_or_else(|| Error::Parse(format!("mult entry {e} must be [i, j, coords]")))?;
            let i = t[0]
                .as_u64()
                .ok_or_else(|| Error::Parse("mult index must be an integer".into()))?
                as usize;
            let j = t[1]
                .as_u64()
                .ok_or_else(|| Error::Parse("mult index must be an integer".into()))?
                as usize;
            entries.push((i, j, vec_from(&t[2])?));
        }
        Algebra::new(field, basis, unit, idempotents, entries, None, None)
    }
}

/// Build the path algebra of a quiver with monomial relations. The basis is
/// all paths avoiding every relation as a contiguous subpath, enumerated by
/// length then discovery order; enumeration past `cap` rejects the
/// presentation as non-admissible.
pub fn path_algebra_with_cap(
    q: &Quiver,
    field: FieldSpec,
    cap: usize,
) -> Result<AlgebraRef, Error> {
    let nv = q.vertices.len();
    if nv == 0 {
        return Err(Error::Validation("quiver has no vertices".into()));
    }
    let mut paths: Vec<BasisPath> = (0..nv)
        .map(|v| BasisPath {
            start: v,
            end: v,
            arrows: Vec::new(),
        })
        .collect();
    let has_relation_suffix = |arrows: &[usize]| {
        q.relations
            .iter()
            .any(|rel| arrows.len() >= rel.len() && arrows[arrows.len() - rel.len()..] == rel[..])
    };
    let mut frontier: Vec<usize> = (0..nv).collect();
    let mut length = 1usize;
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for &pi in &frontier {
            for (ai, (_, src, tgt)) in q.arrows.iter().enumerate() {
                if *src != paths[pi].end {
                    continue;
                }
                let mut arrows = paths[pi].arrows.clone();
                arrows.push(ai);
                if has_relation_suffix(&arrows) {
                    continue;
                }
                if paths.len() >= cap {
                    return Err(Error::NonAdmissible { cap, length });
                }
                next.push(paths.len());
                paths.push(BasisPath {
                    start: paths[pi].start,
                    end: *tgt,
                    arrows,
                });
            }
        }
        frontier = next;
        length += 1;
    }

    let dim = paths.len();
    let name_of = |p: &BasisPath| {
        if p.arrows.is_empty() {
            format!("e_{}", q.vertices[p.start])
        } else {
            p.arrows
                .iter()
                .map(|&a| q.arrows[a].0.clone())
                .collect::<Vec<_>>()
                .join("*")
        }
    };
    let names: Vec<String> = paths.iter().map(name_of).collect();
    let index_of = |start: usize, arrows: &[usize]| {
        paths
            .iter()
            .position(|p| p.start == start && p.arrows == arrows)
    };

    let mut entries = Vec::new();
    for (i, p) in paths.iter().enumerate() {
        for (j, r) in paths.iter().enumerate() {
            if p.end != r.start {
                continue;
            }
            let mut arrows = p.arrows.clone();
            arrows.extend(&r.arrows);
            // concatenation dies when any relation appears inside it
            let contains_relation = q.relations.iter().any(|rel| {
                arrows.len() >= rel.len()
                    && (0..=arrows.len() - rel.len()).any(|s| arrows[s..s + rel.len()] == rel[..])
            });
            if contains_relation {
                continue;
            }
            let k = index_of(p.start, &arrows).expect("closed under multiplication");
            let mut coords = vec![field.zero(); dim];
            coords[k] = field.one();
            entries.push((i, j, coords));
        }
    }

    let mut unit = vec![field.zero(); dim];
    let mut idempotents = Vec::with_capacity(nv);
    for v in 0..nv {
        let mut e = vec![field.zero(); dim];
        e[v] = field.one();
        unit[v] = field.one();
        idempotents.push(e);
    }

    Algebra::new(
        field,
        names,
        unit,
        idempotents,
        entries,
        Some(q.clone()),
        Some(paths),
    )
}

pub fn path_algebra(q: &Quiver, field: FieldSpec) -> Result<AlgebraRef, Error> {
    path_algebra_with_cap(q, field, PATH_CAP)
}

/// 1 →a→ 2.
pub fn a2_quiver() -> Quiver {
    Quiver::new(
        vec!["1".into(), "2".into()],
        vec![("a".into(), "1".into(), "2".into())],
        vec![],
    )
    .unwrap()
}

/// Kronecker quiver: two arrows 1 ⇉ 2.
pub fn kronecker_quiver() -> Quiver {
    Quiver::new(
        vec!["1".into(), "2".into()],
        vec![
            ("a".into(), "1".into(), "2".into()),
            ("b".into(), "1".into(), "2".into()),
        ],
        vec![],
    )
    .unwrap()
}

/// One vertex with a loop x and relation x² = 0: k[x]/(x²).
pub fn dual_numbers_quiver() -> Quiver {
    Quiver::new(
        vec!["1".into()],
        vec![("x".into(), "1".into(), "1".into())],
        vec![vec!["x".into(), "x".into()]],
    )
    .unwrap()
}

/// Two vertices, no arrows: k × k.
pub fn two_points_quiver() -> Quiver {
    Quiver::new(vec!["1".into(), "2".into()], vec![], vec![]).unwrap()
}

/// One vertex, no arrows: the ground field.
pub fn point_quiver() -> Quiver {
    Quiver::new(vec!["1".into()], vec![], vec![]).unwrap()
}

/// 1 →a→ 2 →b→ 3 with relation ab = 0.
pub fn a3_zero_relation_quiver() -> Quiver {
    Quiver::new(
        vec!["1".into(), "2".into(), "3".into()],
        vec![
            ("a".into(), "1".into(), "2".into()),
            ("b".into(), "2".into(), "3".into()),
        ],
        vec![vec!["a".into(), "b".into()]],
    )
    .unwrap()
}
