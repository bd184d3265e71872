//! The instance file format: JSON Lines with sorted keys.
//!
//! The first line is a header
//! `{"conductor":N,"conventions":{..},"dim":n,"format":"quasihopf-spec","labels":[..],"version":1}`;
//! every further line is one section tagged by `"section"`. Tensors are
//! sparse lists of `[[indices], "scalar"]` in lexicographic index order:
//!
//! | section       | index tuple                            |
//! |---------------|----------------------------------------|
//! | `mult`        | `[i, j, k]`: coefficient of `e_k` in `e_i e_j` |
//! | `unit`        | `[i]`                                  |
//! | `delta`       | `[i, a, b]`: coefficient of `e_a⊗e_b` in `Δ(e_i)` |
//! | `epsilon`     | `[i]`                                  |
//! | `phi`         | `[a, b, c]`                            |
//! | `antipode`    | `s: [i, j]`, `alpha`/`beta`: `[i]`     |
//! | `ideal`, `subspace` | named; `vectors` is a list of `[i]`-tensors |
//! | `hopf_module` | named; `left [h, m, out]`, `right [m, h, out]`, `coaction [m, x, y]` |
//!
//! Scalars use the literal syntax of [`crate::exactnum`], with `z` standing
//! for `ζ_N` of the header conductor.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactnum::{parse_scalar, Scalar};
use crate::hopfmod::{Coaction, HopfModule};
use crate::multilinear::{BilinearTable, LinMap, Subspace, TensorElement};
use crate::qba::{QbaParts, QuasiBialgebra};
use crate::qha::QuasiAntipode;
use crate::quotient::build_quotient;

pub const FORMAT_NAME: &str = "quasihopf-spec";
pub const FORMAT_VERSION: u32 = 1;

type Entries = Vec<(Vec<usize>, String)>;

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct Header {
    conductor: u32,
    #[serde(default)]
    conventions: BTreeMap<String, String>,
    dim: usize,
    format: String,
    labels: Vec<String>,
    version: u32,
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "section", rename_all = "snake_case", deny_unknown_fields)]
enum Section {
    Mult { entries: Entries },
    Unit { entries: Entries },
    Delta { entries: Entries },
    Epsilon { entries: Entries },
    Phi { entries: Entries },
    Antipode { s: Entries, alpha: Entries, beta: Entries },
    Ideal { name: String, vectors: Vec<Entries> },
    Subspace { name: String, vectors: Vec<Entries> },
    HopfModule {
        name: String,
        dim: usize,
        orientation: String,
        left: Entries,
        right: Entries,
        coaction: Entries,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        free_factor: Option<usize>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        quotient_ideal: Option<String>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SubspaceRole {
    Ideal,
    Subspace,
}

#[derive(Clone, Debug, PartialEq)]
pub struct NamedSubspace {
    pub role: SubspaceRole,
    pub space: Subspace,
}

/// A Hopf module as stored in a file; [`ModuleSpec::build`] attaches it to
/// the file's algebra (building the quotient for left `Q`-coactions).
#[derive(Clone, Debug)]
pub struct ModuleSpec {
    pub dim: usize,
    pub left: BilinearTable,
    pub right: BilinearTable,
    pub coaction: LinMap,
    /// `None` for right `H`-coactions, else the ideal defining `Q`.
    pub quotient_ideal: Option<String>,
    pub free_factor: Option<usize>,
}

impl ModuleSpec {
    pub fn from_module(m: &HopfModule, quotient_ideal: Option<String>) -> Self {
        let coaction = match &m.coaction {
            Coaction::Right(r) => r.clone(),
            Coaction::LeftQ { map, .. } => map.clone(),
        };
        ModuleSpec {
            dim: m.dim,
            left: m.left.clone(),
            right: m.right.clone(),
            coaction,
            quotient_ideal,
            free_factor: m.free_factor,
        }
    }

    pub fn build(&self, file: &SpecFile) -> Result<HopfModule> {
        let h = &file.algebra;
        let coaction = match &self.quotient_ideal {
            None => Coaction::Right(self.coaction.clone()),
            Some(name) => {
                let ideal = file
                    .subspaces
                    .get(name)
                    .ok_or_else(|| Error::Precondition(format!("no subspace section named {name}")))?;
                let presentation = build_quotient(h, &ideal.space)?;
                Coaction::LeftQ {
                    map: self.coaction.clone(),
                    presentation: Box::new(presentation),
                }
            }
        };
        Ok(HopfModule {
            over: h.clone(),
            dim: self.dim,
            left: self.left.clone(),
            right: self.right.clone(),
            coaction,
            free_factor: self.free_factor,
        })
    }
}

/// A parsed instance file.
#[derive(Clone, Debug)]
pub struct SpecFile {
    pub algebra: QuasiBialgebra,
    pub antipode: Option<QuasiAntipode>,
    pub subspaces: BTreeMap<String, NamedSubspace>,
    pub modules: BTreeMap<String, ModuleSpec>,
}

impl SpecFile {
    pub fn new(algebra: QuasiBialgebra, antipode: Option<QuasiAntipode>) -> Self {
        SpecFile {
            algebra,
            antipode,
            subspaces: BTreeMap::new(),
            modules: BTreeMap::new(),
        }
    }

    pub fn with_subspace(mut self, name: &str, role: SubspaceRole, space: Subspace) -> Self {
        self.subspaces.insert(name.into(), NamedSubspace { role, space });
        self
    }

    pub fn with_module(mut self, name: &str, module: ModuleSpec) -> Self {
        self.modules.insert(name.into(), module);
        self
    }

    pub fn parse(text: &str) -> Result<SpecFile> {
        parse(text)
    }

    /// Canonical serialization: sorted keys, one section per line, sections
    /// in a fixed order, named sections by name.
    pub fn to_jsonl(&self) -> String {
        let h = &self.algebra;
        let mut lines = vec![canonical(&Header {
            conductor: h.conductor(),
            conventions: h.notes().clone(),
            dim: h.dim(),
            format: FORMAT_NAME.into(),
            labels: h.labels().to_vec(),
            version: FORMAT_VERSION,
        })];
        let mut push = |s: Section| lines.push(canonical(&s));
        push(Section::Mult { entries: table_entries(h.mult()) });
        push(Section::Unit { entries: tensor_entries(h.unit()) });
        push(Section::Delta { entries: map_entries(h.delta()) });
        push(Section::Epsilon { entries: map_entries(h.epsilon()) });
        push(Section::Phi { entries: tensor_entries(h.phi()) });
        if let Some(a) = &self.antipode {
            push(Section::Antipode {
                s: map_entries(&a.s),
                alpha: tensor_entries(&a.alpha),
                beta: tensor_entries(&a.beta),
            });
        }
        for (name, sub) in &self.subspaces {
            let vectors = sub.space.basis().iter().map(tensor_entries).collect();
            let name = name.clone();
            push(match sub.role {
                SubspaceRole::Ideal => Section::Ideal { name, vectors },
                SubspaceRole::Subspace => Section::Subspace { name, vectors },
            });
        }
        for (name, m) in &self.modules {
            push(Section::HopfModule {
                name: name.clone(),
                dim: m.dim,
                orientation: if m.quotient_ideal.is_some() { "left_q" } else { "right" }.into(),
                left: table_entries(&m.left),
                right: table_entries(&m.right),
                coaction: map_entries(&m.coaction),
                free_factor: m.free_factor,
                quotient_ideal: m.quotient_ideal.clone(),
            });
        }
        let mut out = lines.join("\n");
        out.push('\n');
        out
    }
}

fn canonical<T: Serialize>(x: &T) -> String {
    // serde_json's default map is ordered, so going through Value sorts keys
    let v = serde_json::to_value(x).expect("sections serialize");
    serde_json::to_string(&v).expect("values serialize")
}

fn tensor_entries(t: &TensorElement) -> Entries {
    t.entries().map(|(i, c)| (i.clone(), c.to_literal())).collect()
}

fn table_entries(t: &BilinearTable) -> Entries {
    t.entries().map(|(x, y, z, c)| (vec![x, y, z], c.to_literal())).collect()
}

/// `[source..., target...]` tuples in lexicographic order.
fn map_entries(m: &LinMap) -> Entries {
    let mut out = Vec::new();
    for (j, src) in crate::multilinear::tuples(m.source_shape()).enumerate() {
        for (idx, c) in m.image(j).entries() {
            let mut key = src.clone();
            key.extend(idx);
            out.push((key, c.to_literal()));
        }
    }
    out
}

fn parse(text: &str) -> Result<SpecFile> {
    let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
    let fail = |line: usize, reason: String| Error::Format { line, reason };
    let (hl, first) = lines.next().ok_or_else(|| fail(1, "empty file".into()))?;
    let header: Header = serde_json::from_str(first).map_err(|e| fail(hl + 1, format!("header: {e}")))?;
    if header.format != FORMAT_NAME || header.version != FORMAT_VERSION {
        return Err(fail(
            hl + 1,
            format!("expected format {FORMAT_NAME} version {FORMAT_VERSION}"),
        ));
    }
    if header.labels.len() != header.dim {
        return Err(fail(hl + 1, format!("{} labels for dimension {}", header.labels.len(), header.dim)));
    }
    let (n, cond) = (header.dim, header.conductor);
    if cond == 0 {
        return Err(fail(hl + 1, "conductor must be positive".into()));
    }

    let mut mult = None;
    let mut unit = None;
    let mut delta = None;
    let mut epsilon = None;
    let mut phi = None;
    let mut antipode = None;
    let mut subspaces = BTreeMap::new();
    let mut modules = BTreeMap::new();
    let mut last = hl + 1;
    for (i, line) in lines {
        last = i + 1;
        let section: Section = serde_json::from_str(line).map_err(|e| fail(last, e.to_string()))?;
        let at = |e: Error| match e {
            Error::Format { .. } => e,
            other => fail(last, other.to_string()),
        };
        let dup = |name: &str| fail(last, format!("duplicate section {name}"));
        match section {
            Section::Mult { entries } => {
                if mult.replace((last, table(n, n, n, &entries, cond).map_err(at)?)).is_some() {
                    return Err(dup("mult"));
                }
            }
            Section::Unit { entries } => {
                if unit.replace(tensor(vec![n], &entries, cond).map_err(at)?).is_some() {
                    return Err(dup("unit"));
                }
            }
            Section::Delta { entries } => {
                if delta.replace(map(vec![n], vec![n, n], &entries, cond).map_err(at)?).is_some() {
                    return Err(dup("delta"));
                }
            }
            Section::Epsilon { entries } => {
                if epsilon.replace(map(vec![n], vec![], &entries, cond).map_err(at)?).is_some() {
                    return Err(dup("epsilon"));
                }
            }
            Section::Phi { entries } => {
                if phi.replace(tensor(vec![n, n, n], &entries, cond).map_err(at)?).is_some() {
                    return Err(dup("phi"));
                }
            }
            Section::Antipode { s, alpha, beta } => {
                let parsed = (
                    map(vec![n], vec![n], &s, cond).map_err(at)?,
                    tensor(vec![n], &alpha, cond).map_err(at)?,
                    tensor(vec![n], &beta, cond).map_err(at)?,
                );
                if antipode.replace((last, parsed)).is_some() {
                    return Err(dup("antipode"));
                }
            }
            Section::Ideal { name, vectors } | Section::Subspace { name, vectors } if subspaces.contains_key(&name) => {
                drop(vectors);
                return Err(dup(&name));
            }
            Section::Ideal { name, vectors } => {
                let space = subspace(n, &vectors, cond).map_err(at)?;
                subspaces.insert(name, NamedSubspace { role: SubspaceRole::Ideal, space });
            }
            Section::Subspace { name, vectors } => {
                let space = subspace(n, &vectors, cond).map_err(at)?;
                subspaces.insert(name, NamedSubspace { role: SubspaceRole::Subspace, space });
            }
            Section::HopfModule {
                name,
                dim,
                orientation,
                left,
                right,
                coaction,
                free_factor,
                quotient_ideal,
            } => {
                if modules.contains_key(&name) {
                    return Err(dup(&name));
                }
                let target = match (orientation.as_str(), &quotient_ideal) {
                    ("right", None) => vec![dim, n],
                    ("left_q", Some(_)) => Vec::new(),
                    _ => {
                        return Err(fail(
                            last,
                            "orientation must be \"right\", or \"left_q\" with quotient_ideal".into(),
                        ))
                    }
                };
                let target = if target.is_empty() {
                    let q_dim = quotient_dim(&subspaces, quotient_ideal.as_deref().unwrap_or_default(), n)
                        .ok_or_else(|| fail(last, "quotient_ideal must name an earlier ideal section".into()))?;
                    vec![q_dim, dim]
                } else {
                    target
                };
                let spec = ModuleSpec {
                    dim,
                    left: table(n, dim, dim, &left, cond).map_err(at)?,
                    right: table(dim, n, dim, &right, cond).map_err(at)?,
                    coaction: map(vec![dim], target, &coaction, cond).map_err(at)?,
                    quotient_ideal,
                    free_factor,
                };
                modules.insert(name, spec);
            }
        }
    }
    let missing = |s: &str| fail(last + 1, format!("missing section {s}"));
    let (mult_line, mult) = mult.ok_or_else(|| missing("mult"))?;
    let algebra = QuasiBialgebra::new(QbaParts {
        conductor: cond,
        labels: header.labels,
        mult,
        unit: unit.ok_or_else(|| missing("unit"))?,
        delta: delta.ok_or_else(|| missing("delta"))?,
        epsilon: epsilon.ok_or_else(|| missing("epsilon"))?,
        phi: phi.ok_or_else(|| missing("phi"))?,
    })
    .map_err(|e| fail(mult_line, e.to_string()))?;
    let algebra = header
        .conventions
        .into_iter()
        .fold(algebra, |a, (k, v)| a.with_note(k, v));
    let antipode = antipode
        .map(|(line, (s, alpha, beta))| QuasiAntipode::new(s, alpha, beta).map_err(|e| fail(line, e.to_string())))
        .transpose()?;
    Ok(SpecFile {
        algebra,
        antipode,
        subspaces,
        modules,
    })
}

fn quotient_dim(subspaces: &BTreeMap<String, NamedSubspace>, name: &str, n: usize) -> Option<usize> {
    subspaces
        .get(name)
        .filter(|s| s.role == SubspaceRole::Ideal)
        .map(|s| n - s.space.dim())
}

fn scalars(entries: &Entries, arity: usize, cond: u32) -> Result<Vec<(Vec<usize>, Scalar)>> {
    let mut seen = std::collections::BTreeSet::new();
    entries
        .iter()
        .map(|(idx, lit)| {
            if idx.len() != arity {
                return Err(Error::shape(format!("{arity} indices"), format!("{} indices", idx.len())));
            }
            if !seen.insert(idx.clone()) {
                return Err(Error::Precondition(format!("index {idx:?} listed twice")));
            }
            Ok((idx.clone(), parse_scalar(lit, cond)?))
        })
        .collect()
}

fn tensor(shape: Vec<usize>, entries: &Entries, cond: u32) -> Result<TensorElement> {
    let items = scalars(entries, shape.len(), cond)?;
    TensorElement::from_entries(shape, items)
}

fn table(l: usize, r: usize, o: usize, entries: &Entries, cond: u32) -> Result<BilinearTable> {
    let t = tensor(vec![l, r, o], entries, cond)?;
    let mut out = BilinearTable::zero(l, r, o);
    for (idx, c) in t.entries() {
        out.add(idx[0], idx[1], idx[2], c.clone())?;
    }
    Ok(out)
}

fn map(source: Vec<usize>, target: Vec<usize>, entries: &Entries, cond: u32) -> Result<LinMap> {
    let (k, shape) = (source.len(), [source.clone(), target.clone()].concat());
    let t = tensor(shape, entries, cond)?;
    let mut columns: BTreeMap<Vec<usize>, Vec<(Vec<usize>, Scalar)>> = BTreeMap::new();
    for (idx, c) in t.entries() {
        columns.entry(idx[..k].to_vec()).or_default().push((idx[k..].to_vec(), c.clone()));
    }
    LinMap::from_fn(source, target.clone(), |src| {
        let col = columns.remove(src).unwrap_or_default();
        TensorElement::from_entries(target.clone(), col)
    })
}

fn subspace(n: usize, vectors: &[Entries], cond: u32) -> Result<Subspace> {
    let vs = vectors
        .iter()
        .map(|v| tensor(vec![n], v, cond))
        .collect::<Result<Vec<_>>>()?;
    Subspace::from_vectors(vec![n], vs.iter())
}
