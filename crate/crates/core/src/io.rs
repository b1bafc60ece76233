//! JSON schemas for the file formats the command line consumes.
//!
//! - lattice: `{"elements":["0","a"], "leq":[["0","a"]], "involution":{"0":"a","a":"0"}}`
//! - fuzzy relation: `{"universe":["x","y"], "matrix":[["a","b"],["b","a"]]}`
//!   (row-major in declared point order)
//! - fuzzy set: `{"values":{"x":"a","y":"b"}}`
//! - crisp relation: `{"universe":["1","2"], "edges":[["1","2"]]}`
//! - operator: `{"algebra":"m2_fix", "universe":["x","y"],
//!   "images":{"x":{"x":"a","y":"b"}, "y":{"x":"0","y":"1"}}}` where
//!   `algebra` is a catalog id or an inline lattice object and `images`
//!   maps each point to the set the operator assigns to its singleton
//! - axiom: `{"S":["UU","LU"], "T":["I","UU"]}` with `I` the identity word

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::approx::WordError;
use crate::crisp::{CrispError, CrispRelation};
use crate::fuzzy::{Context, FuzzyError, FuzzyRelation, FuzzySet, Universe};
use crate::lattice::{attach_involution, build_lattice, standard_algebra, DmhAlgebra, LatticeError};
use crate::reconstruction::{AbstractOperator, AxiomSpec, ReconstructionError};

#[derive(Debug, Error)]
pub enum LoadError {
    #[error("parse error: {0}")]
    Parse(#[from] serde_json::Error),
    #[error("schema error: {0}")]
    Lattice(#[from] LatticeError),
    #[error("schema error: {0}")]
    Fuzzy(#[from] FuzzyError),
    #[error("schema error: {0}")]
    Crisp(#[from] CrispError),
    #[error("schema error: {0}")]
    Word(#[from] WordError),
    #[error("schema error: {0}")]
    Reconstruction(#[from] ReconstructionError),
    #[error("schema error: {0}")]
    Schema(String),
}

/// Raw form of a lattice file.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct LatticeFile {
    pub elements: Vec<String>,
    pub leq: Vec<(String, String)>,
    pub involution: BTreeMap<String, String>,
}

impl LatticeFile {
    pub fn to_algebra(&self) -> Result<DmhAlgebra, LoadError> {
        let lat = build_lattice(&self.elements, &self.leq)?;
        let neg: Vec<(String, String)> = self
            .involution
            .iter()
            .map(|(k, v)| (k.clone(), v.clone()))
            .collect();
        Ok(attach_involution(lat, &neg)?)
    }
}

/// Parse a lattice file into a validated algebra.
pub fn parse_lattice(json: &str) -> Result<DmhAlgebra, LoadError> {
    let file: LatticeFile = serde_json::from_str(json)?;
    file.to_algebra()
}

/// A catalog id or an inline lattice object.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum AlgebraRef {
    Catalog(String),
    Inline(LatticeFile),
}

impl AlgebraRef {
    pub fn resolve(&self) -> Result<DmhAlgebra, LoadError> {
        match self {
            AlgebraRef::Catalog(name) => Ok(standard_algebra(name)?),
            AlgebraRef::Inline(file) => file.to_algebra(),
        }
    }
}

/// Raw form of a fuzzy relation file.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FuzzyRelationFile {
    pub universe: Vec<String>,
    pub matrix: Vec<Vec<String>>,
}

impl FuzzyRelationFile {
    pub fn from_relation(r: &FuzzyRelation) -> FuzzyRelationFile {
        let ctx = r.context();
        let u = ctx.universe();
        FuzzyRelationFile {
            universe: u.names().to_vec(),
            matrix: u
                .points()
                .map(|x| {
                    u.points()
                        .map(|y| ctx.algebra().name(r.value(x, y)).to_owned())
                        .collect()
                })
                .collect(),
        }
    }

    pub fn to_relation(&self, algebra: Arc<DmhAlgebra>) -> Result<(Context, FuzzyRelation), LoadError> {
        let universe = Arc::new(Universe::new(&self.universe)?);
        let ctx = Context::new(algebra, universe.clone());
        if self.matrix.len() != universe.size() {
            return Err(LoadError::Schema(format!(
                "matrix has {} rows for {} points",
                self.matrix.len(),
                universe.size()
            )));
        }
        let mut values = Vec::with_capacity(universe.size() * universe.size());
        for (i, row) in self.matrix.iter().enumerate() {
            if row.len() != universe.size() {
                return Err(LoadError::Schema(format!(
                    "row {i} has {} entries for {} points",
                    row.len(),
                    universe.size()
                )));
            }
            for entry in row {
                values.push(ctx.algebra().element(entry).ok_or_else(|| {
                    LoadError::Schema(format!("unknown lattice element `{entry}`"))
                })?);
            }
        }
        let rel = ctx.relation_from_fn(|x, y| values[x.index() * universe.size() + y.index()]);
        Ok((ctx, rel))
    }
}

/// Parse a fuzzy relation file against an algebra.
pub fn parse_fuzzy_relation(
    json: &str,
    algebra: Arc<DmhAlgebra>,
) -> Result<(Context, FuzzyRelation), LoadError> {
    let file: FuzzyRelationFile = serde_json::from_str(json)?;
    file.to_relation(algebra)
}

/// Raw form of a fuzzy set file.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FuzzySetFile {
    pub values: BTreeMap<String, String>,
}

impl FuzzySetFile {
    pub fn from_set(set: &FuzzySet) -> FuzzySetFile {
        let ctx = set.context();
        FuzzySetFile {
            values: ctx
                .universe()
                .points()
                .map(|p| {
                    (
                        ctx.universe().name(p).to_owned(),
                        ctx.algebra().name(set.value(p)).to_owned(),
                    )
                })
                .collect(),
        }
    }

    pub fn to_set(&self, ctx: &Context) -> Result<FuzzySet, LoadError> {
        let mut values = Vec::with_capacity(ctx.universe().size());
        for p in ctx.universe().points() {
            let name = ctx.universe().name(p);
            let raw = self.values.get(name).ok_or_else(|| {
                LoadError::Schema(format!("set is missing a value for point `{name}`"))
            })?;
            values.push(ctx.algebra().element(raw).ok_or_else(|| {
                LoadError::Schema(format!("unknown lattice element `{raw}`"))
            })?);
        }
        for key in self.values.keys() {
            if ctx.universe().point(key).is_none() {
                return Err(LoadError::Schema(format!("unknown point `{key}`")));
            }
        }
        Ok(ctx.set_from_fn(|p| values[p.index()]))
    }
}

/// Parse a fuzzy set file against a context.
pub fn parse_fuzzy_set(json: &str, ctx: &Context) -> Result<FuzzySet, LoadError> {
    let file: FuzzySetFile = serde_json::from_str(json)?;
    file.to_set(ctx)
}

/// Raw form of a crisp relation file.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CrispRelationFile {
    pub universe: Vec<String>,
    pub edges: Vec<(String, String)>,
}

impl CrispRelationFile {
    pub fn to_relation(&self) -> Result<CrispRelation, LoadError> {
        let universe = Arc::new(Universe::new(&self.universe)?);
        Ok(CrispRelation::from_edges(universe, &self.edges)?)
    }
}

/// Parse a crisp relation file.
pub fn parse_crisp_relation(json: &str) -> Result<CrispRelation, LoadError> {
    let file: CrispRelationFile = serde_json::from_str(json)?;
    file.to_relation()
}

/// Raw form of an operator file: singleton images over a named or inline
/// algebra.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct OperatorFile {
    pub algebra: AlgebraRef,
    pub universe: Vec<String>,
    pub images: BTreeMap<String, BTreeMap<String, String>>,
}

impl OperatorFile {
    pub fn to_operator(&self) -> Result<AbstractOperator, LoadError> {
        let algebra = Arc::new(self.algebra.resolve()?);
        let universe = Arc::new(Universe::new(&self.universe)?);
        let ctx = Context::new(algebra, universe.clone());
        let mut images = Vec::with_capacity(universe.size());
        for p in universe.points() {
            let name = universe.name(p);
            let raw = self.images.get(name).ok_or_else(|| {
                LoadError::Schema(format!("operator is missing the image of `{name}`"))
            })?;
            let file = FuzzySetFile { values: raw.clone() };
            images.push(file.to_set(&ctx)?);
        }
        Ok(AbstractOperator::singleton_generated(ctx, images)?)
    }
}

/// Parse an operator file.
pub fn parse_operator(json: &str) -> Result<AbstractOperator, LoadError> {
    let file: OperatorFile = serde_json::from_str(json)?;
    file.to_operator()
}

/// Raw form of an axiom file.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct AxiomFile {
    #[serde(rename = "S", default)]
    pub upper_bounds: Vec<String>,
    #[serde(rename = "T", default)]
    pub lower_bounds: Vec<String>,
}

impl AxiomFile {
    pub fn to_spec(&self) -> Result<AxiomSpec, LoadError> {
        let parse = |words: &[String]| {
            words
                .iter()
                .map(|w| w.parse().map_err(LoadError::from))
                .collect::<Result<Vec<_>, _>>()
        };
        Ok(AxiomSpec::new(
            parse(&self.upper_bounds)?,
            parse(&self.lower_bounds)?,
        ))
    }
}

/// Parse an axiom file.
pub fn parse_axiom(json: &str) -> Result<AxiomSpec, LoadError> {
    let file: AxiomFile = serde_json::from_str(json)?;
    file.to_spec()
}
