//! Workspace files: named groups, algebras, morphisms and extension data, resolved
//! and validated on load.

use std::collections::BTreeMap;
use std::path::Path;
use std::sync::Arc;

use hopfkit::cleft::{section_from_matrix, Cocycle, MeasuringAction};
use hopfkit::groups::linearize_section;
use hopfkit::hopf_core::{ComultTerms, SparseVec};
use hopfkit::{
    group_algebra, zoo, CoalgebraMap, Field, FinGroup, FinHopfAlgebra, GroupHom, HopfData,
    HopfMorphism, HopfSubalgebra, Matrix, Scalar, Subspace, Vector,
};
use serde::Deserialize;
use serde_json::Value;

use crate::error::CliError;

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawWorkspace {
    field: Option<Value>,
    #[serde(default)]
    groups: BTreeMap<String, RawGroup>,
    #[serde(default)]
    algebras: BTreeMap<String, RawAlgebra>,
    #[serde(default)]
    morphisms: BTreeMap<String, RawMorphism>,
    #[serde(default)]
    subalgebras: BTreeMap<String, RawSubalgebra>,
    #[serde(default)]
    sections: BTreeMap<String, RawSection>,
    #[serde(default)]
    actions: BTreeMap<String, RawBilinear>,
    #[serde(default)]
    cocycles: BTreeMap<String, RawBilinear>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawGroup {
    named: Option<String>,
    table: Option<Vec<Vec<usize>>>,
    labels: Option<Vec<String>>,
    /// 0-based images of each generator.
    permutations: Option<Vec<Vec<usize>>>,
    product: Option<Vec<String>>,
}

type RawMult = Vec<(usize, usize, Vec<(usize, Value)>)>;
type RawComult = Vec<(usize, Vec<(Value, usize, usize)>)>;

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawAlgebra {
    group_algebra: Option<String>,
    dim: Option<usize>,
    labels: Option<Vec<String>>,
    /// `[i, j, [[k, c], ...]]`: `e_i e_j = Σ c e_k`.
    mult: Option<RawMult>,
    unit: Option<Vec<Value>>,
    /// `[i, [[c, j, k], ...]]`: `Δ e_i = Σ c e_j ⊗ e_k`.
    comult: Option<RawComult>,
    counit: Option<Vec<Value>>,
    /// Dense rows.
    antipode: Option<Vec<Vec<Value>>>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawGroupHom {
    dom: String,
    cod: String,
    /// Image of every element of `dom`, by label or index: a list in element order,
    /// or an object keyed by element label.
    images: Value,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawMorphism {
    dom: Option<String>,
    cod: Option<String>,
    matrix: Option<Vec<Vec<Value>>>,
    group_hom: Option<RawGroupHom>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSubalgebra {
    algebra: String,
    grouplikes: Option<Vec<String>>,
    basis: Option<Vec<Vec<Value>>>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSection {
    morphism: String,
    matrix: Option<Vec<Vec<Value>>>,
    set_map: Option<Vec<Value>>,
}

/// Actions `H⊗B → B` and cocycles `H⊗H → B`, as dense rows or sparse `[row, col, value]`.
#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawBilinear {
    h: String,
    b: String,
    #[serde(default)]
    trivial: bool,
    matrix: Option<Vec<Vec<Value>>>,
    entries: Option<Vec<(usize, usize, Value)>>,
}

/// A morphism together with the group homomorphism it linearizes, if any.
#[derive(Clone, Debug)]
pub struct Morphism {
    pub hopf: HopfMorphism,
    pub group: Option<GroupHom>,
}

#[derive(Clone, Debug)]
pub struct Section {
    pub morphism: String,
    pub map: CoalgebraMap,
    pub set_map: Option<Vec<usize>>,
}

#[derive(Debug)]
pub struct Workspace {
    pub field: Field,
    groups: BTreeMap<String, Arc<FinGroup>>,
    algebras: BTreeMap<String, Arc<FinHopfAlgebra>>,
    morphisms: BTreeMap<String, Morphism>,
    subalgebras: BTreeMap<String, HopfSubalgebra>,
    sections: BTreeMap<String, Section>,
    actions: BTreeMap<String, MeasuringAction>,
    cocycles: BTreeMap<String, Cocycle>,
}

/// `"Q"`, `"F<p>"`, or `{"Fp": p}`.
pub fn parse_field(v: &Value) -> Result<Field, CliError> {
    let bad = || CliError::invalid("field", "field", format!("unrecognised field {v}"));
    match v {
        Value::String(s) if s == "Q" => Ok(Field::Rational),
        Value::String(s) => {
            let p = s
                .strip_prefix("Fp")
                .or_else(|| s.strip_prefix('F'))
                .and_then(|p| p.parse::<u64>().ok())
                .ok_or_else(bad)?;
            Field::prime(p).map_err(|e| CliError::invalid("field", "field", e.to_string()))
        }
        Value::Object(m) if m.len() == 1 && m.contains_key("Q") => Ok(Field::Rational),
        Value::Object(m) if m.len() == 1 => {
            let p = m.get("Fp").and_then(Value::as_u64).ok_or_else(bad)?;
            Field::prime(p).map_err(|e| CliError::invalid("field", "field", e.to_string()))
        }
        _ => Err(bad()),
    }
}

fn scalar(field: Field, v: &Value, kind: &'static str, name: &str) -> Result<Scalar, CliError> {
    match v {
        Value::String(s) => field
            .parse(s)
            .map_err(|e| CliError::invalid(kind, name, e.to_string())),
        Value::Number(n) => n
            .as_i64()
            .map(|n| field.from_i64(n))
            .ok_or_else(|| CliError::invalid(kind, name, format!("non-integer number {n}"))),
        _ => Err(CliError::invalid(kind, name, format!("bad scalar {v}"))),
    }
}

fn vector(field: Field, vs: &[Value], kind: &'static str, name: &str) -> Result<Vector, CliError> {
    vs.iter().map(|v| scalar(field, v, kind, name)).collect()
}

fn dense(
    field: Field,
    rows: &[Vec<Value>],
    shape: (usize, usize),
    kind: &'static str,
    name: &str,
) -> Result<Matrix, CliError> {
    if rows.len() != shape.0 || rows.iter().any(|r| r.len() != shape.1) {
        return Err(CliError::invalid(
            kind,
            name,
            format!("expected a {}x{} matrix", shape.0, shape.1),
        ));
    }
    let rows = rows
        .iter()
        .map(|r| vector(field, r, kind, name))
        .collect::<Result<Vec<_>, _>>()?;
    Matrix::from_rows(field, shape.1, rows)
        .map_err(|e| CliError::invalid(kind, name, e.to_string()))
}

fn element(g: &FinGroup, v: &Value, kind: &'static str, name: &str) -> Result<usize, CliError> {
    let found = match v {
        Value::String(s) => g.element_by_label(s),
        Value::Number(n) => n.as_u64().map(|i| i as usize).filter(|&i| i < g.order()),
        _ => None,
    };
    found.ok_or_else(|| CliError::invalid(kind, name, format!("unknown group element {v}")))
}

fn math<'a>(kind: &'static str, name: &'a str) -> impl Fn(hopfkit::Error) -> CliError + 'a {
    move |e| CliError::invalid(kind, name, e.to_string())
}

impl Workspace {
    pub fn empty(field: Field) -> Self {
        Workspace {
            field,
            groups: BTreeMap::new(),
            algebras: BTreeMap::new(),
            morphisms: BTreeMap::new(),
            subalgebras: BTreeMap::new(),
            sections: BTreeMap::new(),
            actions: BTreeMap::new(),
            cocycles: BTreeMap::new(),
        }
    }

    pub fn from_path(path: &Path, field: Option<Field>) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::Io {
            path: path.display().to_string(),
            message: e.to_string(),
        })?;
        Self::from_json(&text, field)
    }

    /// Parses and validates a workspace; `field` overrides the file's own field.
    pub fn from_json(text: &str, field: Option<Field>) -> Result<Self, CliError> {
        let raw: RawWorkspace =
            serde_json::from_str(text).map_err(|e| CliError::Json(e.to_string()))?;
        let field = match (field, &raw.field) {
            (Some(f), _) => f,
            (None, Some(v)) => parse_field(v)?,
            (None, None) => Field::Rational,
        };
        let mut ws = Workspace::empty(field);
        // groups may refer to earlier products, so resolve until no progress
        let mut pending: Vec<(&String, &RawGroup)> = raw.groups.iter().collect();
        while !pending.is_empty() {
            let before = pending.len();
            let mut rest = Vec::new();
            for (name, g) in pending {
                match ws.load_group(name, g) {
                    Err(CliError::UnknownReference { .. }) => rest.push((name, g)),
                    other => {
                        let g = other?;
                        ws.groups.insert(name.clone(), Arc::new(g));
                    }
                }
            }
            if rest.len() == before {
                let (name, g) = rest[0];
                ws.load_group(name, g)?;
            }
            pending = rest;
        }
        for (name, a) in &raw.algebras {
            let alg = ws.load_algebra(name, a)?;
            ws.algebras.insert(name.clone(), Arc::new(alg));
        }
        for (name, m) in &raw.morphisms {
            let mor = ws.load_morphism(name, m)?;
            ws.morphisms.insert(name.clone(), mor);
        }
        for (name, s) in &raw.subalgebras {
            let sub = ws.load_subalgebra(name, s)?;
            ws.subalgebras.insert(name.clone(), sub);
        }
        for (name, s) in &raw.sections {
            let sec = ws.load_section(name, s)?;
            ws.sections.insert(name.clone(), sec);
        }
        for (name, a) in &raw.actions {
            let (h, b, m) = ws.load_bilinear(name, a, "action", false)?;
            let act = if a.trivial {
                MeasuringAction::trivial(h, b)
            } else {
                MeasuringAction::new(h, b, m).map_err(math("action", name))?
            };
            ws.actions.insert(name.clone(), act);
        }
        for (name, c) in &raw.cocycles {
            let (h, b, m) = ws.load_bilinear(name, c, "cocycle", true)?;
            let sig = if c.trivial {
                Cocycle::trivial(h, b)
            } else {
                Cocycle::new(h, b, m).map_err(math("cocycle", name))?
            };
            ws.cocycles.insert(name.clone(), sig);
        }
        Ok(ws)
    }

    fn load_group(&self, name: &str, g: &RawGroup) -> Result<FinGroup, CliError> {
        let given = [
            g.named.is_some(),
            g.table.is_some(),
            g.permutations.is_some(),
            g.product.is_some(),
        ];
        if given.iter().filter(|&&x| x).count() != 1 {
            return Err(CliError::invalid(
                "group",
                name,
                "give exactly one of named, table, permutations, product".into(),
            ));
        }
        let built = if let Some(n) = &g.named {
            FinGroup::named(n)
        } else if let Some(t) = &g.table {
            FinGroup::from_table(t.clone(), g.labels.clone())
        } else if let Some(p) = &g.permutations {
            FinGroup::from_permutations(p)
        } else {
            let parts = g.product.as_deref().unwrap_or_default();
            let mut acc = FinGroup::trivial();
            for (i, part) in parts.iter().enumerate() {
                let next = self.group(part)?;
                acc = if i == 0 {
                    (*next).clone()
                } else {
                    FinGroup::direct_product(&acc, &next)
                };
            }
            Ok(acc)
        };
        built.map_err(math("group", name))
    }

    fn load_algebra(&self, name: &str, a: &RawAlgebra) -> Result<FinHopfAlgebra, CliError> {
        if let Some(g) = &a.group_algebra {
            return Ok(group_algebra(&*self.group(g)?, self.field));
        }
        let f = self.field;
        let missing = |what: &str| CliError::invalid("algebra", name, format!("missing `{what}`"));
        let dim = a.dim.ok_or_else(|| missing("dim"))?;
        let zero_mult: Vec<SparseVec> = vec![Vec::new(); dim * dim];
        let mut mult = zero_mult;
        for (i, j, terms) in a.mult.as_ref().ok_or_else(|| missing("mult"))? {
            if *i >= dim || *j >= dim || terms.iter().any(|(k, _)| *k >= dim) {
                return Err(CliError::invalid(
                    "algebra",
                    name,
                    "mult index out of range".into(),
                ));
            }
            let mut v: SparseVec = terms
                .iter()
                .map(|(k, c)| Ok((*k, scalar(f, c, "algebra", name)?)))
                .collect::<Result<_, CliError>>()?;
            v.sort_by_key(|(k, _)| *k);
            v.retain(|(_, c)| !c.is_zero());
            mult[i * dim + j] = v;
        }
        let mut comult: Vec<ComultTerms> = vec![Vec::new(); dim];
        for (i, terms) in a.comult.as_ref().ok_or_else(|| missing("comult"))? {
            if *i >= dim || terms.iter().any(|(_, j, k)| *j >= dim || *k >= dim) {
                return Err(CliError::invalid(
                    "algebra",
                    name,
                    "comult index out of range".into(),
                ));
            }
            comult[*i] = terms
                .iter()
                .map(|(c, j, k)| Ok((scalar(f, c, "algebra", name)?, *j, *k)))
                .collect::<Result<_, CliError>>()?;
        }
        let unit = vector(
            f,
            a.unit.as_ref().ok_or_else(|| missing("unit"))?,
            "algebra",
            name,
        )?;
        let counit = vector(
            f,
            a.counit.as_ref().ok_or_else(|| missing("counit"))?,
            "algebra",
            name,
        )?;
        let antipode = dense(
            f,
            a.antipode.as_ref().ok_or_else(|| missing("antipode"))?,
            (dim, dim),
            "algebra",
            name,
        )?;
        if unit.len() != dim || counit.len() != dim {
            return Err(CliError::invalid(
                "algebra",
                name,
                "unit/counit length".into(),
            ));
        }
        FinHopfAlgebra::new(HopfData {
            field: f,
            dim,
            mult,
            unit,
            comult,
            counit,
            antipode,
            labels: a.labels.clone(),
        })
        .map_err(math("algebra", name))
    }

    fn load_morphism(&self, name: &str, m: &RawMorphism) -> Result<Morphism, CliError> {
        if let Some(gh) = &m.group_hom {
            if m.matrix.is_some() {
                return Err(CliError::invalid(
                    "morphism",
                    name,
                    "give matrix or group_hom".into(),
                ));
            }
            let (g, h) = (self.group(&gh.dom)?, self.group(&gh.cod)?);
            let listed: Vec<&Value> = match &gh.images {
                Value::Array(vs) => vs.iter().collect(),
                Value::Object(map) => {
                    if let Some(k) = map.keys().find(|k| g.element_by_label(k).is_none()) {
                        return Err(CliError::invalid(
                            "morphism",
                            name,
                            format!("unknown element {k}"),
                        ));
                    }
                    g.labels().iter().filter_map(|l| map.get(l)).collect()
                }
                _ => {
                    return Err(CliError::invalid(
                        "morphism",
                        name,
                        "images must be a list or object".into(),
                    ))
                }
            };
            if listed.len() != g.order() {
                return Err(CliError::invalid(
                    "morphism",
                    name,
                    "one image per element".into(),
                ));
            }
            let images = listed
                .into_iter()
                .map(|v| element(&h, v, "morphism", name))
                .collect::<Result<_, _>>()?;
            let phi =
                GroupHom::new(g.clone(), h.clone(), images).map_err(math("morphism", name))?;
            let dom = match &m.dom {
                Some(a) => self.algebra(a)?,
                None => Arc::new(group_algebra(&g, self.field)),
            };
            let cod = match &m.cod {
                Some(a) => self.algebra(a)?,
                None => Arc::new(group_algebra(&h, self.field)),
            };
            let hopf = phi.linearize(&dom, &cod).map_err(math("morphism", name))?;
            return Ok(Morphism {
                hopf,
                group: Some(phi),
            });
        }
        let (Some(d), Some(c), Some(rows)) = (&m.dom, &m.cod, &m.matrix) else {
            return Err(CliError::invalid(
                "morphism",
                name,
                "give dom, cod and matrix, or group_hom".into(),
            ));
        };
        let (dom, cod) = (self.algebra(d)?, self.algebra(c)?);
        let matrix = dense(self.field, rows, (cod.dim(), dom.dim()), "morphism", name)?;
        let hopf = HopfMorphism::new(dom, cod, matrix).map_err(math("morphism", name))?;
        Ok(Morphism { hopf, group: None })
    }

    fn load_subalgebra(&self, name: &str, s: &RawSubalgebra) -> Result<HopfSubalgebra, CliError> {
        let a = self.algebra(&s.algebra)?;
        let vectors: Vec<Vector> = match (&s.grouplikes, &s.basis) {
            (Some(labels), None) => {
                let all = a.labels();
                labels
                    .iter()
                    .map(|l| {
                        all.iter()
                            .position(|x| x == l)
                            .map(|i| a.basis(i))
                            .ok_or_else(|| {
                                CliError::invalid(
                                    "subalgebra",
                                    name,
                                    format!("unknown basis label {l}"),
                                )
                            })
                    })
                    .collect::<Result<_, _>>()?
            }
            (None, Some(rows)) => {
                if rows.iter().any(|r| r.len() != a.dim()) {
                    return Err(CliError::invalid(
                        "subalgebra",
                        name,
                        "basis vector length".into(),
                    ));
                }
                rows.iter()
                    .map(|r| vector(self.field, r, "subalgebra", name))
                    .collect::<Result<_, _>>()?
            }
            _ => {
                return Err(CliError::invalid(
                    "subalgebra",
                    name,
                    "give exactly one of grouplikes, basis".into(),
                ))
            }
        };
        let sub = Subspace::span(self.field, a.dim(), vectors.iter().map(Vec::as_slice));
        HopfSubalgebra::new(a, sub).map_err(math("subalgebra", name))
    }

    fn load_section(&self, name: &str, s: &RawSection) -> Result<Section, CliError> {
        let m = self.morphism(&s.morphism)?;
        let (dom, cod) = (m.hopf.dom().clone(), m.hopf.cod().clone());
        let (map, set_map) = match (&s.matrix, &s.set_map) {
            (Some(rows), None) => {
                let mat = dense(self.field, rows, (dom.dim(), cod.dim()), "section", name)?;
                (
                    section_from_matrix(&m.hopf, mat).map_err(math("section", name))?,
                    None,
                )
            }
            (None, Some(images)) => {
                let phi = m.group.as_ref().ok_or_else(|| {
                    CliError::invalid("section", name, "set_map needs a group_hom morphism".into())
                })?;
                let set: Vec<usize> = images
                    .iter()
                    .map(|v| element(phi.dom(), v, "section", name))
                    .collect::<Result<_, _>>()?;
                let map =
                    linearize_section(phi, &set, &dom, &cod).map_err(math("section", name))?;
                (map, Some(set))
            }
            _ => {
                return Err(CliError::invalid(
                    "section",
                    name,
                    "give exactly one of matrix, set_map".into(),
                ))
            }
        };
        Ok(Section {
            morphism: s.morphism.clone(),
            map,
            set_map,
        })
    }

    fn load_bilinear(
        &self,
        name: &str,
        raw: &RawBilinear,
        kind: &'static str,
        square: bool,
    ) -> Result<(Arc<FinHopfAlgebra>, Arc<FinHopfAlgebra>, Matrix), CliError> {
        let (h, b) = (self.algebra(&raw.h)?, self.algebra(&raw.b)?);
        let cols = h.dim() * if square { h.dim() } else { b.dim() };
        let shape = (b.dim(), cols);
        let m = match (raw.trivial, &raw.matrix, &raw.entries) {
            (true, None, None) => Matrix::zeros(self.field, shape.0, shape.1),
            (false, Some(rows), None) => dense(self.field, rows, shape, kind, name)?,
            (false, None, Some(entries)) => {
                let mut m = Matrix::zeros(self.field, shape.0, shape.1);
                for (r, c, v) in entries {
                    if *r >= shape.0 || *c >= shape.1 {
                        return Err(CliError::invalid(kind, name, "entry out of range".into()));
                    }
                    m[(*r, *c)] = scalar(self.field, v, kind, name)?;
                }
                m
            }
            _ => {
                return Err(CliError::invalid(
                    kind,
                    name,
                    "give exactly one of trivial, matrix, entries".into(),
                ))
            }
        };
        Ok((h, b, m))
    }

    /// Workspace group, a standard group such as `S3`, `Q8`, `C2xC2`, or any name `FinGroup::named` accepts.
    pub fn group(&self, name: &str) -> Result<Arc<FinGroup>, CliError> {
        if let Some(g) = self.groups.get(name) {
            return Ok(g.clone());
        }
        if let Some((_, g)) = zoo::groups().into_iter().find(|(n, _)| *n == name) {
            return Ok(Arc::new(g));
        }
        FinGroup::named(name)
            .map(Arc::new)
            .map_err(|_| CliError::unknown("group", name))
    }

    /// Workspace algebra, or `k<G>` / `Q<G>` / `k[G]` for a resolvable group `G`.
    pub fn algebra(&self, name: &str) -> Result<Arc<FinHopfAlgebra>, CliError> {
        if let Some(a) = self.algebras.get(name) {
            return Ok(a.clone());
        }
        let inner = name
            .strip_prefix("k[")
            .and_then(|s| s.strip_suffix(']'))
            .or_else(|| name.strip_prefix('k'))
            .or_else(|| {
                name.strip_prefix('Q')
                    .filter(|_| self.field == Field::Rational)
            });
        match inner {
            Some("") => Ok(Arc::new(FinHopfAlgebra::base_field(self.field))),
            Some(g) => self
                .group(g)
                .map(|g| Arc::new(group_algebra(&g, self.field)))
                .map_err(|_| CliError::unknown("algebra", name)),
            None => Err(CliError::unknown("algebra", name)),
        }
    }

    /// Workspace morphism, or a standard extension such as `Q8->C2xC2`.
    pub fn morphism(&self, name: &str) -> Result<Morphism, CliError> {
        if let Some(m) = self.morphisms.get(name) {
            return Ok(m.clone());
        }
        let (_, phi) = zoo::extensions()
            .into_iter()
            .find(|(n, _)| *n == name)
            .ok_or_else(|| CliError::unknown("morphism", name))?;
        let dom = Arc::new(group_algebra(phi.dom(), self.field));
        let cod = Arc::new(group_algebra(phi.cod(), self.field));
        let hopf = phi.linearize(&dom, &cod).map_err(math("morphism", name))?;
        Ok(Morphism {
            hopf,
            group: Some(phi),
        })
    }

    /// Workspace subalgebra, or the whole of a resolvable algebra.
    pub fn subalgebra(&self, name: &str) -> Result<HopfSubalgebra, CliError> {
        if let Some(s) = self.subalgebras.get(name) {
            return Ok(s.clone());
        }
        self.algebra(name)
            .map(HopfSubalgebra::whole)
            .map_err(|_| CliError::unknown("subalgebra", name))
    }

    pub fn section(&self, name: &str) -> Result<Section, CliError> {
        self.sections
            .get(name)
            .cloned()
            .ok_or_else(|| CliError::unknown("section", name))
    }

    pub fn action(&self, name: &str) -> Result<MeasuringAction, CliError> {
        self.actions
            .get(name)
            .cloned()
            .ok_or_else(|| CliError::unknown("action", name))
    }

    pub fn cocycle(&self, name: &str) -> Result<Cocycle, CliError> {
        self.cocycles
            .get(name)
            .cloned()
            .ok_or_else(|| CliError::unknown("cocycle", name))
    }
}
