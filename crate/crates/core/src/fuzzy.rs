//! L-fuzzy sets and relations over a finite universe.
//!
//! A [`Context`] pairs a shared algebra with a shared universe; every fuzzy
//! set and relation carries its context, and operations across different
//! contexts are errors rather than coercions. Iteration over points and
//! lattice elements always follows declared order, which keeps enumeration
//! ranks and counterexample reports deterministic.

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::lattice::{DmhAlgebra, Elem};

/// Index of a universe point.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point(pub(crate) usize);

impl Point {
    pub fn index(self) -> usize {
        self.0
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FuzzyError {
    #[error("universe needs at least one point")]
    EmptyUniverse,
    #[error("duplicate point `{0}`")]
    DuplicatePoint(String),
    #[error("unknown point `{0}`")]
    UnknownPoint(String),
    #[error("operands come from different algebra/universe contexts")]
    MixedContext,
    #[error("enumeration of {required} items exceeds the cap of {cap}")]
    EnumerationTooLarge { required: u128, cap: usize },
}

/// A finite, nonempty universe of named points.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Universe {
    points: Vec<String>,
}

impl Universe {
    pub fn new<S: AsRef<str>>(points: &[S]) -> Result<Universe, FuzzyError> {
        if points.is_empty() {
            return Err(FuzzyError::EmptyUniverse);
        }
        let points: Vec<String> = points.iter().map(|p| p.as_ref().to_owned()).collect();
        for (i, p) in points.iter().enumerate() {
            if points[..i].contains(p) {
                return Err(FuzzyError::DuplicatePoint(p.clone()));
            }
        }
        Ok(Universe { points })
    }

    /// A universe of `n` points named `x, y, z` for `n ≤ 3`, else `p0, p1, …`.
    pub fn of_size(n: usize) -> Result<Universe, FuzzyError> {
        if n <= 3 {
            Universe::new(&["x", "y", "z"][..n])
        } else {
            let names: Vec<String> = (0..n).map(|i| format!("p{i}")).collect();
            Universe::new(&names)
        }
    }

    pub fn size(&self) -> usize {
        self.points.len()
    }

    pub fn points(&self) -> impl Iterator<Item = Point> + '_ {
        (0..self.points.len()).map(Point)
    }

    pub fn point(&self, name: &str) -> Option<Point> {
        self.points.iter().position(|p| p == name).map(Point)
    }

    pub fn name(&self, p: Point) -> &str {
        &self.points[p.0]
    }

    pub fn names(&self) -> &[String] {
        &self.points
    }
}

/// Enumeration caps. Exceeding a cap is an explicit error, never silent
/// sampling.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumCaps {
    /// Maximum number of fuzzy sets enumerated per law check.
    pub sets: usize,
    /// Maximum number of relations enumerated per sweep.
    pub relations: usize,
}

impl Default for EnumCaps {
    fn default() -> Self {
        EnumCaps {
            sets: 10_000,
            relations: 1_000_000,
        }
    }
}

/// Hard ceiling on any single set enumeration, independent of caller caps.
pub const SET_ENUMERATION_HARD_CAP: usize = 1_000_000;

/// A shared (algebra, universe) pair that fuzzy sets and relations live in.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Context {
    algebra: Arc<DmhAlgebra>,
    universe: Arc<Universe>,
}

impl Context {
    pub fn new(algebra: Arc<DmhAlgebra>, universe: Arc<Universe>) -> Context {
        Context { algebra, universe }
    }

    pub fn algebra(&self) -> &DmhAlgebra {
        &self.algebra
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn algebra_arc(&self) -> &Arc<DmhAlgebra> {
        &self.algebra
    }

    pub fn universe_arc(&self) -> &Arc<Universe> {
        &self.universe
    }

    /// The constant set `ā` with value `a` everywhere.
    pub fn constant(&self, a: Elem) -> FuzzySet {
        FuzzySet {
            ctx: self.clone(),
            values: vec![a; self.universe.size()],
        }
    }

    /// The empty set `𝟎`.
    pub fn bottom_set(&self) -> FuzzySet {
        self.constant(self.algebra.bottom())
    }

    /// The full set `𝟏`.
    pub fn top_set(&self) -> FuzzySet {
        self.constant(self.algebra.top())
    }

    /// The singleton map `I_x`: value 1 at `x`, 0 elsewhere.
    pub fn singleton(&self, x: Point) -> FuzzySet {
        let mut values = vec![self.algebra.bottom(); self.universe.size()];
        values[x.0] = self.algebra.top();
        FuzzySet {
            ctx: self.clone(),
            values,
        }
    }

    /// Look up a point by name and build its singleton.
    pub fn singleton_named(&self, name: &str) -> Result<FuzzySet, FuzzyError> {
        let p = self
            .universe
            .point(name)
            .ok_or_else(|| FuzzyError::UnknownPoint(name.into()))?;
        Ok(self.singleton(p))
    }

    pub fn set_from_fn(&self, f: impl Fn(Point) -> Elem) -> FuzzySet {
        FuzzySet {
            ctx: self.clone(),
            values: self.universe.points().map(f).collect(),
        }
    }

    pub fn relation_from_fn(&self, f: impl Fn(Point, Point) -> Elem) -> FuzzyRelation {
        let n = self.universe.size();
        let mut values = Vec::with_capacity(n * n);
        for x in self.universe.points() {
            for y in self.universe.points() {
                values.push(f(x, y));
            }
        }
        FuzzyRelation {
            ctx: self.clone(),
            values,
        }
    }

    /// Number of fuzzy sets over this context: `|L|^|U|`.
    pub fn set_count(&self) -> u128 {
        (self.algebra.size() as u128).pow(self.universe.size() as u32)
    }

    /// Number of fuzzy relations over this context: `|L|^(|U|²)`.
    pub fn relation_count(&self) -> u128 {
        (self.algebra.size() as u128).pow((self.universe.size() * self.universe.size()) as u32)
    }

    /// Decode the set at `rank` in lexicographic order (first point is the
    /// most significant digit, digit values follow declared element order).
    pub fn set_by_rank(&self, rank: usize) -> FuzzySet {
        let l = self.algebra.size();
        let n = self.universe.size();
        let mut values = vec![self.algebra.bottom(); n];
        let mut r = rank;
        for i in (0..n).rev() {
            values[i] = Elem(r % l);
            r /= l;
        }
        FuzzySet {
            ctx: self.clone(),
            values,
        }
    }

    /// Decode the relation at `rank`; digits are row-major over `U × U`.
    pub fn relation_by_rank(&self, rank: usize) -> FuzzyRelation {
        let l = self.algebra.size();
        let n = self.universe.size();
        let mut values = vec![self.algebra.bottom(); n * n];
        let mut r = rank;
        for i in (0..n * n).rev() {
            values[i] = Elem(r % l);
            r /= l;
        }
        FuzzyRelation {
            ctx: self.clone(),
            values,
        }
    }

    /// Enumerate every fuzzy set in lexicographic order.
    pub fn sets(&self) -> Result<impl Iterator<Item = FuzzySet> + '_, FuzzyError> {
        self.sets_capped(SET_ENUMERATION_HARD_CAP)
    }

    /// Enumerate every fuzzy set, failing when the count exceeds `cap`.
    pub fn sets_capped(
        &self,
        cap: usize,
    ) -> Result<impl Iterator<Item = FuzzySet> + '_, FuzzyError> {
        let count = self.set_count();
        if count > cap.min(SET_ENUMERATION_HARD_CAP) as u128 {
            return Err(FuzzyError::EnumerationTooLarge {
                required: count,
                cap: cap.min(SET_ENUMERATION_HARD_CAP),
            });
        }
        Ok((0..count as usize).map(|r| self.set_by_rank(r)))
    }

    /// Enumerate every fuzzy relation, failing when the count exceeds `cap`.
    pub fn relations_capped(
        &self,
        cap: usize,
    ) -> Result<impl Iterator<Item = FuzzyRelation> + '_, FuzzyError> {
        let count = self.relation_count();
        if count > cap as u128 {
            return Err(FuzzyError::EnumerationTooLarge {
                required: count,
                cap,
            });
        }
        Ok((0..count as usize).map(|r| self.relation_by_rank(r)))
    }
}

/// An L-fuzzy set: a total map from universe points to algebra elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FuzzySet {
    ctx: Context,
    values: Vec<Elem>,
}

impl FuzzySet {
    pub fn context(&self) -> &Context {
        &self.ctx
    }

    pub fn value(&self, p: Point) -> Elem {
        self.values[p.0]
    }

    pub fn values(&self) -> &[Elem] {
        &self.values
    }

    fn same_context(&self, other: &FuzzySet) -> Result<(), FuzzyError> {
        if self.ctx == other.ctx {
            Ok(())
        } else {
            Err(FuzzyError::MixedContext)
        }
    }

    fn zip_with(
        &self,
        other: &FuzzySet,
        f: impl Fn(&DmhAlgebra, Elem, Elem) -> Elem,
    ) -> Result<FuzzySet, FuzzyError> {
        self.same_context(other)?;
        let alg = self.ctx.algebra();
        Ok(FuzzySet {
            ctx: self.ctx.clone(),
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(&a, &b)| f(alg, a, b))
                .collect(),
        })
    }

    /// Pointwise join `A ∨ B`.
    pub fn join(&self, other: &FuzzySet) -> Result<FuzzySet, FuzzyError> {
        self.zip_with(other, DmhAlgebra::join)
    }

    /// Pointwise meet `A ∧ B`.
    pub fn meet(&self, other: &FuzzySet) -> Result<FuzzySet, FuzzyError> {
        self.zip_with(other, DmhAlgebra::meet)
    }

    /// Pointwise Heyting implication `A ⇒ B`.
    pub fn implies(&self, other: &FuzzySet) -> Result<FuzzySet, FuzzyError> {
        self.zip_with(other, DmhAlgebra::implies)
    }

    /// Pointwise De Morgan arrow `A → B = A' ∨ B`.
    pub fn arrow(&self, other: &FuzzySet) -> Result<FuzzySet, FuzzyError> {
        self.zip_with(other, DmhAlgebra::arrow)
    }

    /// Pointwise involution `A'`.
    pub fn neg(&self) -> FuzzySet {
        let alg = self.ctx.algebra();
        FuzzySet {
            ctx: self.ctx.clone(),
            values: self.values.iter().map(|&a| alg.neg(a)).collect(),
        }
    }

    /// Pointwise order. Sets from different contexts are incomparable.
    pub fn le(&self, other: &FuzzySet) -> bool {
        self.ctx == other.ctx
            && self
                .values
                .iter()
                .zip(&other.values)
                .all(|(&a, &b)| self.ctx.algebra().leq(a, b))
    }

    /// Lexicographic rank within the enumeration of this context.
    pub fn rank(&self) -> usize {
        let l = self.ctx.algebra().size();
        self.values.iter().fold(0, |acc, e| acc * l + e.0)
    }

    /// Verify that this set equals both of its canonical decompositions:
    /// the join of `ā_{A(x)} ∧ I_x` and the meet of `ā_{A(x)} ∨ I_x'` over
    /// all points `x`. Holds for every fuzzy set; exposed as a self-test.
    pub fn decomposition_check(&self) -> bool {
        let ctx = &self.ctx;
        let mut join_form = ctx.bottom_set();
        let mut meet_form = ctx.top_set();
        for x in ctx.universe().points() {
            let constant = ctx.constant(self.value(x));
            let singleton = ctx.singleton(x);
            let piece = constant.meet(&singleton).expect("same context");
            join_form = join_form.join(&piece).expect("same context");
            let copiece = constant.join(&singleton.neg()).expect("same context");
            meet_form = meet_form.meet(&copiece).expect("same context");
        }
        join_form == *self && meet_form == *self
    }
}

impl PartialOrd for FuzzySet {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        if self.ctx != other.ctx {
            return None;
        }
        match (self.le(other), other.le(self)) {
            (true, true) => Some(std::cmp::Ordering::Equal),
            (true, false) => Some(std::cmp::Ordering::Less),
            (false, true) => Some(std::cmp::Ordering::Greater),
            (false, false) => None,
        }
    }
}

impl fmt::Display for FuzzySet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, x) in self.ctx.universe().points().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(
                f,
                "{}↦{}",
                self.ctx.universe().name(x),
                self.ctx.algebra().name(self.value(x))
            )?;
        }
        write!(f, "}}")
    }
}

/// An L-fuzzy relation: a total map `U × U → L`, stored row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FuzzyRelation {
    ctx: Context,
    values: Vec<Elem>,
}

impl FuzzyRelation {
    pub fn context(&self) -> &Context {
        &self.ctx
    }

    pub fn value(&self, x: Point, y: Point) -> Elem {
        self.values[x.0 * self.ctx.universe().size() + y.0]
    }

    pub fn values(&self) -> &[Elem] {
        &self.values
    }

    /// Lexicographic rank within the enumeration of this context.
    pub fn rank(&self) -> usize {
        let l = self.ctx.algebra().size();
        self.values.iter().fold(0, |acc, e| acc * l + e.0)
    }
}

impl fmt::Display for FuzzyRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let u = self.ctx.universe();
        write!(f, "{{")?;
        for (i, x) in u.points().enumerate() {
            for (j, y) in u.points().enumerate() {
                if i + j > 0 {
                    write!(f, ", ")?;
                }
                write!(
                    f,
                    "({},{})↦{}",
                    u.name(x),
                    u.name(y),
                    self.ctx.algebra().name(self.value(x, y))
                )?;
            }
        }
        write!(f, "}}")
    }
}
