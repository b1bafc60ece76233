//! Classical binary relations and rough approximations over bitsets.
//!
//! This is a thin native layer: a relation stores one `u64` row mask per
//! point, sets are single masks, and the approximations are bit operations.
//! The two-element Boolean embedding into the fuzzy module is kept alongside
//! as the correctness oracle and the two paths are cross-checked in tests.
//!
//! For a relation `ρ` and a set `X`:
//!
//! - lower: `X_ρ = { x | ρ(x) ⊆ X }`
//! - upper: `X^ρ = { x | ρ(x) ∩ X ≠ ∅ }`
//!
//! Truth values in witnesses are reported as `0`/`1`, matching the element
//! names of the two-element algebra.

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::fuzzy::{Context, FuzzyRelation, FuzzySet, Point, Universe};
use crate::lattice::standard_algebra_arc;
use crate::relations::{PropertyKind, PropertyReport, UnsupportedKindError, Witness};

/// Subset enumeration bound: `2^|U|` must stay within this.
pub const SUBSET_ENUMERATION_CAP: usize = 1 << 20;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CrispError {
    #[error("universe of {0} points exceeds the bitset width of 64")]
    UniverseTooLarge(usize),
    #[error("operands come from different universes")]
    MixedContext,
    #[error("unknown point `{0}`")]
    UnknownPoint(String),
    #[error(transparent)]
    Unsupported(#[from] UnsupportedKindError),
    #[error("enumeration of {required} subsets exceeds the cap of {cap}")]
    EnumerationTooLarge { required: u128, cap: usize },
}

/// A subset of the universe, stored as a bitmask.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrispSet {
    universe: Arc<Universe>,
    mask: u64,
}

impl CrispSet {
    pub fn empty(universe: Arc<Universe>) -> Result<CrispSet, CrispError> {
        CrispSet::from_mask(universe, 0)
    }

    pub fn full(universe: Arc<Universe>) -> Result<CrispSet, CrispError> {
        let n = universe.size();
        CrispSet::from_mask(universe, full_mask(n)?)
    }

    pub fn from_mask(universe: Arc<Universe>, mask: u64) -> Result<CrispSet, CrispError> {
        let n = universe.size();
        if n > 64 {
            return Err(CrispError::UniverseTooLarge(n));
        }
        Ok(CrispSet {
            universe,
            mask: mask & full_mask(n)?,
        })
    }

    pub fn from_members<S: AsRef<str>>(
        universe: Arc<Universe>,
        members: &[S],
    ) -> Result<CrispSet, CrispError> {
        let mut mask = 0u64;
        for m in members {
            let p = universe
                .point(m.as_ref())
                .ok_or_else(|| CrispError::UnknownPoint(m.as_ref().into()))?;
            mask |= 1 << p.index();
        }
        CrispSet::from_mask(universe, mask)
    }

    pub fn universe(&self) -> &Arc<Universe> {
        &self.universe
    }

    pub fn mask(&self) -> u64 {
        self.mask
    }

    pub fn contains(&self, p: Point) -> bool {
        self.mask & (1 << p.index()) != 0
    }

    pub fn is_subset_of(&self, other: &CrispSet) -> bool {
        self.universe == other.universe && self.mask & !other.mask == 0
    }

    pub fn members(&self) -> Vec<&str> {
        self.universe
            .points()
            .filter(|&p| self.contains(p))
            .map(|p| self.universe.name(p))
            .collect()
    }
}

impl fmt::Display for CrispSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.members().join(","))
    }
}

fn full_mask(n: usize) -> Result<u64, CrispError> {
    if n > 64 {
        return Err(CrispError::UniverseTooLarge(n));
    }
    Ok(if n == 64 { u64::MAX } else { (1u64 << n) - 1 })
}

/// A classical binary relation, one row mask per point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrispRelation {
    universe: Arc<Universe>,
    rows: Vec<u64>,
}

impl CrispRelation {
    pub fn from_edges<S: AsRef<str>>(
        universe: Arc<Universe>,
        edges: &[(S, S)],
    ) -> Result<CrispRelation, CrispError> {
        let n = universe.size();
        if n > 64 {
            return Err(CrispError::UniverseTooLarge(n));
        }
        let mut rows = vec![0u64; n];
        for (from, to) in edges {
            let f = universe
                .point(from.as_ref())
                .ok_or_else(|| CrispError::UnknownPoint(from.as_ref().into()))?;
            let t = universe
                .point(to.as_ref())
                .ok_or_else(|| CrispError::UnknownPoint(to.as_ref().into()))?;
            rows[f.index()] |= 1 << t.index();
        }
        Ok(CrispRelation { universe, rows })
    }

    pub fn from_fn(
        universe: Arc<Universe>,
        f: impl Fn(Point, Point) -> bool,
    ) -> Result<CrispRelation, CrispError> {
        let n = universe.size();
        if n > 64 {
            return Err(CrispError::UniverseTooLarge(n));
        }
        let rows = universe
            .points()
            .map(|x| {
                universe
                    .points()
                    .filter(|&y| f(x, y))
                    .fold(0u64, |m, y| m | 1 << y.index())
            })
            .collect();
        Ok(CrispRelation { universe, rows })
    }

    /// Decode a relation from its row-major bit rank; bit `(x,y)` of the
    /// rank is taken most-significant-first, matching the fuzzy enumeration.
    pub fn from_rank(universe: Arc<Universe>, rank: u64) -> Result<CrispRelation, CrispError> {
        let n = universe.size();
        CrispRelation::from_fn(universe, |x, y| {
            let bit = n * n - 1 - (x.index() * n + y.index());
            rank >> bit & 1 == 1
        })
    }

    pub fn universe(&self) -> &Arc<Universe> {
        &self.universe
    }

    pub fn related(&self, x: Point, y: Point) -> bool {
        self.rows[x.index()] & (1 << y.index()) != 0
    }

    /// The successor set `ρ(x)` as a mask.
    pub fn row(&self, x: Point) -> u64 {
        self.rows[x.index()]
    }

    fn same_universe(&self, set: &CrispSet) -> Result<(), CrispError> {
        if self.universe == set.universe {
            Ok(())
        } else {
            Err(CrispError::MixedContext)
        }
    }

    /// `X_ρ = { x | ρ(x) ⊆ X }`.
    pub fn lower_approx(&self, x: &CrispSet) -> Result<CrispSet, CrispError> {
        self.same_universe(x)?;
        let mask = self
            .universe
            .points()
            .filter(|&p| self.rows[p.index()] & !x.mask == 0)
            .fold(0u64, |m, p| m | 1 << p.index());
        CrispSet::from_mask(self.universe.clone(), mask)
    }

    /// `X^ρ = { x | ρ(x) ∩ X ≠ ∅ }`.
    pub fn upper_approx(&self, x: &CrispSet) -> Result<CrispSet, CrispError> {
        self.same_universe(x)?;
        let mask = self
            .universe
            .points()
            .filter(|&p| self.rows[p.index()] & x.mask != 0)
            .fold(0u64, |m, p| m | 1 << p.index());
        CrispSet::from_mask(self.universe.clone(), mask)
    }
}

impl fmt::Display for CrispRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        let mut first = true;
        for x in self.universe.points() {
            for y in self.universe.points() {
                if self.related(x, y) {
                    if !first {
                        write!(f, ", ")?;
                    }
                    first = false;
                    write!(f, "({},{})", self.universe.name(x), self.universe.name(y))?;
                }
            }
        }
        write!(f, "}}")
    }
}

fn bool_name(v: bool) -> String {
    if v { "1" } else { "0" }.to_owned()
}

/// Evaluate the classical definition of `kind` on `rel`.
///
/// The three lattice-specific refinements of seriality and symmetry collapse
/// in the crisp setting and are rejected; use `serial` and
/// `symmetric_classical` instead.
pub fn crisp_property(
    rel: &CrispRelation,
    kind: PropertyKind,
) -> Result<PropertyReport, CrispError> {
    let u = rel.universe();
    let pname = |p: Point| u.name(p).to_owned();
    let fails = |points: Vec<String>, lhs: bool, rhs: bool| PropertyReport {
        kind,
        holds: false,
        witness: Some(Witness {
            points,
            lhs: bool_name(lhs),
            rhs: bool_name(rhs),
        }),
    };
    let holds = PropertyReport {
        kind,
        holds: true,
        witness: None,
    };

    match kind {
        PropertyKind::Serial => {
            for x in u.points() {
                if rel.row(x) == 0 {
                    return Ok(fails(vec![pname(x)], false, true));
                }
            }
            Ok(holds)
        }
        PropertyKind::Reflexive => {
            for x in u.points() {
                if !rel.related(x, x) {
                    return Ok(fails(vec![pname(x)], false, true));
                }
            }
            Ok(holds)
        }
        PropertyKind::SymmetricClassical => {
            for x in u.points() {
                for y in u.points() {
                    if rel.related(x, y) != rel.related(y, x) {
                        return Ok(fails(
                            vec![pname(x), pname(y)],
                            rel.related(x, y),
                            rel.related(y, x),
                        ));
                    }
                }
            }
            Ok(holds)
        }
        PropertyKind::Transitive => {
            for x in u.points() {
                for z in u.points() {
                    for y in u.points() {
                        if rel.related(x, z) && rel.related(z, y) && !rel.related(x, y) {
                            return Ok(fails(vec![pname(x), pname(z), pname(y)], true, false));
                        }
                    }
                }
            }
            Ok(holds)
        }
        PropertyKind::Mediate => {
            for x in u.points() {
                for y in u.points() {
                    if rel.related(x, y)
                        && !u.points().any(|z| rel.related(x, z) && rel.related(z, y))
                    {
                        return Ok(fails(vec![pname(x), pname(y)], true, false));
                    }
                }
            }
            Ok(holds)
        }
        PropertyKind::Euclidean => {
            for x in u.points() {
                for y in u.points() {
                    for z in u.points() {
                        if rel.related(x, y) && rel.related(x, z) && !rel.related(y, z) {
                            return Ok(fails(vec![pname(x), pname(y), pname(z)], true, false));
                        }
                    }
                }
            }
            Ok(holds)
        }
        PropertyKind::Adjoint => {
            for x in u.points() {
                for y in u.points() {
                    if rel.related(x, y) {
                        let ok = u
                            .points()
                            .any(|z| rel.related(x, z) && rel.row(z) & !(1 << y.index()) == 0);
                        if !ok {
                            return Ok(fails(vec![pname(x), pname(y)], true, false));
                        }
                    }
                }
            }
            Ok(holds)
        }
        PropertyKind::Functional => {
            for x in u.points() {
                for y in u.points() {
                    if rel.related(x, y) && rel.row(x) & !(1 << y.index()) != 0 {
                        return Ok(fails(vec![pname(x), pname(y)], true, false));
                    }
                }
            }
            Ok(holds)
        }
        PropertyKind::PositiveAlliance => {
            for x in u.points() {
                for y in u.points() {
                    if !rel.related(x, y)
                        && !u.points().any(|z| rel.related(x, z) && !rel.related(z, y))
                    {
                        return Ok(fails(vec![pname(x), pname(y)], true, false));
                    }
                }
            }
            Ok(holds)
        }
        PropertyKind::SerialPointed | PropertyKind::SerialSingleton | PropertyKind::SymmetricDm => {
            Err(UnsupportedKindError::new(kind, "no separate crisp notion of").into())
        }
    }
}

/// The six classical property/approximation correspondences, checked by
/// enumerating every subset:
///
/// - serial: `U^ρ = U`, `∅_ρ = ∅`, and `X_ρ ⊆ X^ρ` for all `X`
/// - reflexive: `X_ρ ⊆ X` and `X ⊆ X^ρ`
/// - symmetric: `(X_ρ)^ρ ⊆ X` and `X ⊆ (X^ρ)_ρ`
/// - transitive: `(X^ρ)^ρ ⊆ X^ρ` and `X_ρ ⊆ (X_ρ)_ρ`
/// - mediate: `X^ρ ⊆ (X^ρ)^ρ` and `(X_ρ)_ρ ⊆ X_ρ`
/// - Euclidean: `X^ρ ⊆ (X^ρ)_ρ` and `(X_ρ)^ρ ⊆ X_ρ`
///
/// Returns whether the property verdict agrees with every listed
/// operator form.
pub fn crisp_correspondence(rel: &CrispRelation, kind: PropertyKind) -> Result<bool, CrispError> {
    let prop = crisp_property(rel, kind)?.holds;
    let universe = rel.universe().clone();
    let n = universe.size();
    let subsets = 1u128 << (n as u32);
    if subsets > SUBSET_ENUMERATION_CAP as u128 {
        return Err(CrispError::EnumerationTooLarge {
            required: subsets,
            cap: SUBSET_ENUMERATION_CAP,
        });
    }

    let mut all_forms = Vec::new();
    match kind {
        PropertyKind::Serial => {
            let full = CrispSet::full(universe.clone())?;
            let empty = CrispSet::empty(universe.clone())?;
            all_forms.push(rel.upper_approx(&full)? == full);
            all_forms.push(rel.lower_approx(&empty)? == empty);
            all_forms.push(for_all_subsets(rel, |r, x| {
                Ok(r.lower_approx(x)?.is_subset_of(&r.upper_approx(x)?))
            })?);
        }
        PropertyKind::Reflexive => {
            all_forms.push(for_all_subsets(rel, |r, x| {
                Ok(r.lower_approx(x)?.is_subset_of(x))
            })?);
            all_forms.push(for_all_subsets(rel, |r, x| {
                Ok(x.is_subset_of(&r.upper_approx(x)?))
            })?);
        }
        PropertyKind::SymmetricClassical => {
            all_forms.push(for_all_subsets(rel, |r, x| {
                Ok(r.upper_approx(&r.lower_approx(x)?)?.is_subset_of(x))
            })?);
            all_forms.push(for_all_subsets(rel, |r, x| {
                Ok(x.is_subset_of(&r.lower_approx(&r.upper_approx(x)?)?))
            })?);
        }
        PropertyKind::Transitive => {
            all_forms.push(for_all_subsets(rel, |r, x| {
                let up = r.upper_approx(x)?;
                Ok(r.upper_approx(&up)?.is_subset_of(&up))
            })?);
            all_forms.push(for_all_subsets(rel, |r, x| {
                let low = r.lower_approx(x)?;
                Ok(low.is_subset_of(&r.lower_approx(&low)?))
            })?);
        }
        PropertyKind::Mediate => {
            all_forms.push(for_all_subsets(rel, |r, x| {
                let up = r.upper_approx(x)?;
                Ok(up.is_subset_of(&r.upper_approx(&up)?))
            })?);
            all_forms.push(for_all_subsets(rel, |r, x| {
                let low = r.lower_approx(x)?;
                Ok(r.lower_approx(&low)?.is_subset_of(&low))
            })?);
        }
        PropertyKind::Euclidean => {
            all_forms.push(for_all_subsets(rel, |r, x| {
                let up = r.upper_approx(x)?;
                Ok(up.is_subset_of(&r.lower_approx(&up)?))
            })?);
            all_forms.push(for_all_subsets(rel, |r, x| {
                let low = r.lower_approx(x)?;
                Ok(r.upper_approx(&low)?.is_subset_of(&low))
            })?);
        }
        other => {
            return Err(UnsupportedKindError::new(
                other,
                "no classical correspondence listed for",
            )
            .into())
        }
    }
    Ok(all_forms.into_iter().all(|form| form == prop))
}

fn for_all_subsets(
    rel: &CrispRelation,
    pred: impl Fn(&CrispRelation, &CrispSet) -> Result<bool, CrispError>,
) -> Result<bool, CrispError> {
    let n = rel.universe().size();
    for mask in 0..(1u64 << n) {
        let x = CrispSet::from_mask(rel.universe().clone(), mask)?;
        if !pred(rel, &x)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The singleton form of the positive alliance condition:
/// `({x}^ρ)_ρ ⊆ {x}^ρ` for every `x`. Agrees with
/// `crisp_property(positive_alliance)`.
pub fn alliance_singleton_check(rel: &CrispRelation) -> Result<bool, CrispError> {
    for x in rel.universe().points() {
        let singleton = CrispSet::from_mask(rel.universe().clone(), 1 << x.index())?;
        let up = rel.upper_approx(&singleton)?;
        if !rel.lower_approx(&up)?.is_subset_of(&up) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The all-sets strengthening `(X^ρ)_ρ ⊆ X^ρ` of the alliance condition.
/// Returns the first violating `X` in mask order, or `None` when the law
/// holds. A positive alliance relation can still violate this: the singleton
/// condition does not lift to arbitrary sets.
pub fn alliance_all_sets_law(rel: &CrispRelation) -> Result<Option<CrispSet>, CrispError> {
    let n = rel.universe().size();
    let subsets = 1u128 << (n as u32);
    if subsets > SUBSET_ENUMERATION_CAP as u128 {
        return Err(CrispError::EnumerationTooLarge {
            required: subsets,
            cap: SUBSET_ENUMERATION_CAP,
        });
    }
    for mask in 0..(1u64 << n) {
        let x = CrispSet::from_mask(rel.universe().clone(), mask)?;
        let up = rel.upper_approx(&x)?;
        if !rel.lower_approx(&up)?.is_subset_of(&up) {
            return Ok(Some(x));
        }
    }
    Ok(None)
}

/// Counts from a crisp correspondence sweep over all relations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrispSweepReport {
    pub kind: PropertyKind,
    pub relations_checked: usize,
    pub agreements: usize,
    pub disagreements: usize,
}

/// Check the classical correspondence for `kind` on every relation over the
/// universe, all `2^(|U|²)` of them.
pub fn crisp_sweep(
    universe: &Arc<Universe>,
    kind: PropertyKind,
    cap: usize,
) -> Result<CrispSweepReport, CrispError> {
    let n = universe.size();
    let total = 1u128 << ((n * n) as u32);
    if total > cap as u128 {
        return Err(CrispError::EnumerationTooLarge {
            required: total,
            cap,
        });
    }
    let mut report = CrispSweepReport {
        kind,
        relations_checked: 0,
        agreements: 0,
        disagreements: 0,
    };
    for rank in 0..total as u64 {
        let rel = CrispRelation::from_rank(universe.clone(), rank)?;
        report.relations_checked += 1;
        if crisp_correspondence(&rel, kind)? {
            report.agreements += 1;
        } else {
            report.disagreements += 1;
        }
    }
    Ok(report)
}

/// The fuzzy context used as the correctness oracle for the crisp layer.
pub fn bool2_context(universe: Arc<Universe>) -> Context {
    Context::new(
        standard_algebra_arc("bool2").expect("catalog id"),
        universe,
    )
}

/// Embed a crisp relation as a 0/1-valued fuzzy relation.
pub fn embed_relation(rel: &CrispRelation, ctx: &Context) -> Result<FuzzyRelation, CrispError> {
    if ctx.universe() != rel.universe().as_ref() {
        return Err(CrispError::MixedContext);
    }
    let alg = ctx.algebra();
    Ok(ctx.relation_from_fn(|x, y| {
        if rel.related(x, y) {
            alg.top()
        } else {
            alg.bottom()
        }
    }))
}

/// Embed a crisp set as a 0/1-valued fuzzy set.
pub fn embed_set(set: &CrispSet, ctx: &Context) -> Result<FuzzySet, CrispError> {
    if ctx.universe() != set.universe().as_ref() {
        return Err(CrispError::MixedContext);
    }
    let alg = ctx.algebra();
    Ok(ctx.set_from_fn(|p| if set.contains(p) { alg.top() } else { alg.bottom() }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::approx::{lower, upper};

    fn universe(points: &[&str]) -> Arc<Universe> {
        Arc::new(Universe::new(points).unwrap())
    }

    /// ρ(1)={4}, ρ(2)={2,3}, ρ(3)={1,2}, ρ(4)={4}.
    fn figure_relation() -> CrispRelation {
        let u = universe(&["1", "2", "3", "4"]);
        CrispRelation::from_edges(
            u,
            &[("1", "4"), ("2", "2"), ("2", "3"), ("3", "1"), ("3", "2"), ("4", "4")],
        )
        .unwrap()
    }

    #[test]
    fn approximations_on_the_four_point_relation() {
        let rel = figure_relation();
        let u = rel.universe().clone();
        let x = CrispSet::from_members(u.clone(), &["3", "4"]).unwrap();
        let up = rel.upper_approx(&x).unwrap();
        assert_eq!(up, CrispSet::from_members(u.clone(), &["1", "2", "4"]).unwrap());
        let low = rel.lower_approx(&up).unwrap();
        assert_eq!(low, CrispSet::from_members(u.clone(), &["1", "3", "4"]).unwrap());
        assert!(!low.is_subset_of(&up));

        let empty = CrispSet::empty(u).unwrap();
        assert_eq!(rel.upper_approx(&empty).unwrap(), empty);
    }

    #[test]
    fn the_four_point_relation_is_an_alliance_but_fails_the_all_sets_law() {
        let rel = figure_relation();
        assert!(crisp_property(&rel, PropertyKind::PositiveAlliance)
            .unwrap()
            .holds);
        assert!(alliance_singleton_check(&rel).unwrap());
        let violating = alliance_all_sets_law(&rel).unwrap().expect("law must fail");
        let up = rel.upper_approx(&violating).unwrap();
        assert!(!rel.lower_approx(&up).unwrap().is_subset_of(&up));
    }

    #[test]
    fn serial_not_transitive_three_point_example() {
        let u = universe(&["a", "b", "c"]);
        let rel = CrispRelation::from_edges(
            u,
            &[("a", "b"), ("b", "b"), ("c", "a"), ("c", "c")],
        )
        .unwrap();
        assert!(crisp_property(&rel, PropertyKind::Serial).unwrap().holds);
        let transitive = crisp_property(&rel, PropertyKind::Transitive).unwrap();
        assert!(!transitive.holds);
        assert_eq!(transitive.witness.unwrap().points, vec!["c", "a", "b"]);
        assert!(crisp_property(&rel, PropertyKind::PositiveAlliance)
            .unwrap()
            .holds);
    }

    #[test]
    fn full_relation_has_all_listed_properties() {
        let u = universe(&["x", "y", "z"]);
        let rel = CrispRelation::from_fn(u, |_, _| true).unwrap();
        for kind in [
            PropertyKind::Serial,
            PropertyKind::Reflexive,
            PropertyKind::SymmetricClassical,
            PropertyKind::Transitive,
            PropertyKind::Mediate,
            PropertyKind::Euclidean,
        ] {
            assert!(crisp_property(&rel, kind).unwrap().holds, "{kind}");
        }
    }

    #[test]
    fn reflexive_relations_are_alliances() {
        let u = universe(&["x", "y", "z"]);
        for rank in 0..512u64 {
            let rel = CrispRelation::from_rank(u.clone(), rank).unwrap();
            if crisp_property(&rel, PropertyKind::Reflexive).unwrap().holds {
                assert!(crisp_property(&rel, PropertyKind::PositiveAlliance)
                    .unwrap()
                    .holds);
            }
        }
    }

    #[test]
    fn serial_and_transitive_imply_alliance_and_the_all_sets_law() {
        let u = universe(&["x", "y", "z"]);
        for rank in 0..512u64 {
            let rel = CrispRelation::from_rank(u.clone(), rank).unwrap();
            if crisp_property(&rel, PropertyKind::Serial).unwrap().holds
                && crisp_property(&rel, PropertyKind::Transitive).unwrap().holds
            {
                assert!(crisp_property(&rel, PropertyKind::PositiveAlliance)
                    .unwrap()
                    .holds);
                assert_eq!(alliance_all_sets_law(&rel).unwrap(), None);
            }
        }
    }

    #[test]
    fn alliance_singleton_check_matches_the_property() {
        let u = universe(&["x", "y", "z"]);
        for rank in 0..512u64 {
            let rel = CrispRelation::from_rank(u.clone(), rank).unwrap();
            assert_eq!(
                alliance_singleton_check(&rel).unwrap(),
                crisp_property(&rel, PropertyKind::PositiveAlliance)
                    .unwrap()
                    .holds
            );
        }
    }

    #[test]
    fn empty_relation_correspondences() {
        let u = universe(&["x", "y"]);
        let rel = CrispRelation::from_fn(u, |_, _| false).unwrap();
        assert!(!crisp_property(&rel, PropertyKind::Serial).unwrap().holds);
        // Both sides of the seriality biconditional are false together.
        assert!(crisp_correspondence(&rel, PropertyKind::Serial).unwrap());
    }

    #[test]
    fn lattice_specific_kinds_are_rejected() {
        let rel = figure_relation();
        for kind in [
            PropertyKind::SerialPointed,
            PropertyKind::SerialSingleton,
            PropertyKind::SymmetricDm,
        ] {
            assert!(crisp_property(&rel, kind).is_err());
        }
        assert!(crisp_correspondence(&rel, PropertyKind::PositiveAlliance).is_err());
    }

    #[test]
    fn embedding_commutes_with_approximations() {
        let u = universe(&["x", "y", "z"]);
        let ctx = bool2_context(u.clone());
        for rank in [0u64, 5, 73, 200, 511] {
            let rel = CrispRelation::from_rank(u.clone(), rank).unwrap();
            let fuzzy_rel = embed_relation(&rel, &ctx).unwrap();
            for mask in 0..8u64 {
                let x = CrispSet::from_mask(u.clone(), mask).unwrap();
                let fx = embed_set(&x, &ctx).unwrap();
                assert_eq!(
                    embed_set(&rel.upper_approx(&x).unwrap(), &ctx).unwrap(),
                    upper(&fuzzy_rel, &fx).unwrap()
                );
                assert_eq!(
                    embed_set(&rel.lower_approx(&x).unwrap(), &ctx).unwrap(),
                    lower(&fuzzy_rel, &fx).unwrap()
                );
            }
        }
    }

    #[test]
    fn mismatched_universes_are_rejected() {
        let rel = figure_relation();
        let other = CrispSet::empty(universe(&["p", "q"])).unwrap();
        assert!(matches!(
            rel.upper_approx(&other),
            Err(CrispError::MixedContext)
        ));
    }
}
