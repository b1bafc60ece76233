//! From abstract operators back to relations.
//!
//! Any map on the fuzzy sets of a context is an abstract operator. Exactly
//! the operators satisfying the base axiom (`𝒰(𝟎) = 𝟎`,
//! `𝒰(A ∨ B) = 𝒰(A) ∨ 𝒰(B)` and `𝒰(ā ∧ A) = ā ∧ 𝒰(A)`) arise as the upper
//! approximation of a relation, and that relation is unique: it can be read
//! off the singleton images as `R(x,y) = 𝒰(I_y)(x)`.
//!
//! The base axiom is stated here in its finite reduction: over a finite
//! context an arbitrary family join is a fold of binary joins starting from
//! the empty join `𝟎`, and the constant-meet step handles the scalar, so the
//! three clauses above are equivalent to the single family-quantified
//! equation `𝒰(ā ∧ ⋁ᵢAᵢ) = ā ∧ ⋁ᵢ𝒰(Aᵢ)`.
//!
//! An [`AxiomSpec`] adds word bounds on top of the base axiom: words `𝒮ⱼ`
//! intended as upper bounds (`𝒰 ≤ 𝒮ⱼ`) and words `𝒯ₖ` intended as lower
//! bounds (`𝒯ₖ ≤ 𝒰`), evaluated through the operators induced by the
//! extracted relation. Instantiating the family equation at singleton
//! families with `a = 1` forces exactly these bounds, so the combined single
//! axiom reduces to: base axiom plus every bound, checked over all sets.

use thiserror::Error;

use crate::approx::{apply_word, upper, OperatorWord};
use crate::fuzzy::{Context, EnumCaps, FuzzyError, FuzzyRelation, FuzzySet};

/// Largest set space for which an extensional table may be built.
pub const EXTENSIONAL_CAP: usize = 256;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ReconstructionError {
    #[error(transparent)]
    Fuzzy(#[from] FuzzyError),
    #[error("extensional table has {got} entries but the context has {expected} sets")]
    TableSize { expected: usize, got: usize },
    #[error("extensional table over {size} sets exceeds the cap of {cap}")]
    TableTooLarge { size: u128, cap: usize },
    #[error("operator needs {expected} singleton images, got {got}")]
    ImageCount { expected: usize, got: usize },
}

/// A total transformation of the fuzzy sets of one context.
///
/// `SingletonGenerated` stores the images of the singletons and extends them
/// join-wise: `𝒰(A) = ⋁ₓ (ā_{A(x)} ∧ 𝒰(I_x))`; such an extension always
/// satisfies the base axiom. `Extensional` tabulates the operator on every
/// set and can represent operators that are not join-generated at all.
/// `Dual` wraps another operator as `A ↦ 𝒰(A')'`, which keeps duals exact
/// without materializing a table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AbstractOperator {
    SingletonGenerated(SingletonImages),
    Extensional(ExtensionalTable),
    Dual(Box<AbstractOperator>),
}

/// The images `𝒰(I_x)`, indexed by point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SingletonImages {
    ctx: Context,
    images: Vec<FuzzySet>,
}

impl SingletonImages {
    pub fn new(ctx: Context, images: Vec<FuzzySet>) -> Result<SingletonImages, ReconstructionError> {
        let expected = ctx.universe().size();
        if images.len() != expected {
            return Err(ReconstructionError::ImageCount {
                expected,
                got: images.len(),
            });
        }
        if images.iter().any(|img| img.context() != &ctx) {
            return Err(FuzzyError::MixedContext.into());
        }
        Ok(SingletonImages { ctx, images })
    }

    pub fn images(&self) -> &[FuzzySet] {
        &self.images
    }
}

/// A full table of the operator, indexed by set rank.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtensionalTable {
    ctx: Context,
    entries: Vec<FuzzySet>,
}

impl ExtensionalTable {
    pub fn new(ctx: Context, entries: Vec<FuzzySet>) -> Result<ExtensionalTable, ReconstructionError> {
        let size = ctx.set_count();
        if size > EXTENSIONAL_CAP as u128 {
            return Err(ReconstructionError::TableTooLarge {
                size,
                cap: EXTENSIONAL_CAP,
            });
        }
        if entries.len() as u128 != size {
            return Err(ReconstructionError::TableSize {
                expected: size as usize,
                got: entries.len(),
            });
        }
        if entries.iter().any(|e| e.context() != &ctx) {
            return Err(FuzzyError::MixedContext.into());
        }
        Ok(ExtensionalTable { ctx, entries })
    }

    /// Tabulate an existing operator.
    pub fn tabulate(op: &AbstractOperator) -> Result<ExtensionalTable, ReconstructionError> {
        let ctx = op.context().clone();
        let size = ctx.set_count();
        if size > EXTENSIONAL_CAP as u128 {
            return Err(ReconstructionError::TableTooLarge {
                size,
                cap: EXTENSIONAL_CAP,
            });
        }
        let entries = ctx
            .sets_capped(EXTENSIONAL_CAP)?
            .map(|a| op.apply(&a))
            .collect::<Result<Vec<_>, _>>()?;
        ExtensionalTable::new(ctx, entries)
    }

    pub fn entries(&self) -> &[FuzzySet] {
        &self.entries
    }

    /// Replace the entry at `rank`; used to probe non-representable tables.
    pub fn with_entry(mut self, rank: usize, entry: FuzzySet) -> Result<ExtensionalTable, ReconstructionError> {
        if entry.context() != &self.ctx {
            return Err(FuzzyError::MixedContext.into());
        }
        self.entries[rank] = entry;
        Ok(self)
    }
}

impl AbstractOperator {
    pub fn singleton_generated(
        ctx: Context,
        images: Vec<FuzzySet>,
    ) -> Result<AbstractOperator, ReconstructionError> {
        Ok(AbstractOperator::SingletonGenerated(SingletonImages::new(
            ctx, images,
        )?))
    }

    pub fn extensional(
        ctx: Context,
        entries: Vec<FuzzySet>,
    ) -> Result<AbstractOperator, ReconstructionError> {
        Ok(AbstractOperator::Extensional(ExtensionalTable::new(
            ctx, entries,
        )?))
    }

    pub fn context(&self) -> &Context {
        match self {
            AbstractOperator::SingletonGenerated(s) => &s.ctx,
            AbstractOperator::Extensional(t) => &t.ctx,
            AbstractOperator::Dual(inner) => inner.context(),
        }
    }

    /// Apply the operator to a set from the same context.
    pub fn apply(&self, a: &FuzzySet) -> Result<FuzzySet, FuzzyError> {
        if a.context() != self.context() {
            return Err(FuzzyError::MixedContext);
        }
        match self {
            AbstractOperator::SingletonGenerated(s) => {
                let ctx = &s.ctx;
                let mut acc = ctx.bottom_set();
                for x in ctx.universe().points() {
                    let piece = ctx
                        .constant(a.value(x))
                        .meet(&s.images[x.index()])
                        .expect("same context");
                    acc = acc.join(&piece).expect("same context");
                }
                Ok(acc)
            }
            AbstractOperator::Extensional(t) => Ok(t.entries[a.rank()].clone()),
            AbstractOperator::Dual(inner) => Ok(inner.apply(&a.neg())?.neg()),
        }
    }
}

/// The upper approximation of `r`, represented by its singleton images.
pub fn operator_from_relation(r: &FuzzyRelation) -> AbstractOperator {
    let ctx = r.context().clone();
    let images = ctx
        .universe()
        .points()
        .map(|y| upper(r, &ctx.singleton(y)).expect("same context"))
        .collect();
    AbstractOperator::SingletonGenerated(SingletonImages { ctx, images })
}

/// Check the base axiom in its finite reduction: `𝒰(𝟎) = 𝟎`, binary join
/// preservation, and constant-meet compatibility.
pub fn base_axiom_holds(op: &AbstractOperator, caps: EnumCaps) -> Result<bool, FuzzyError> {
    let ctx = op.context();
    if op.apply(&ctx.bottom_set())? != ctx.bottom_set() {
        return Ok(false);
    }
    let sets: Vec<FuzzySet> = ctx.sets_capped(caps.sets)?.collect();
    let images: Vec<FuzzySet> = sets
        .iter()
        .map(|a| op.apply(a))
        .collect::<Result<_, _>>()?;
    for (a, img_a) in sets.iter().zip(&images) {
        for (b, img_b) in sets.iter().zip(&images) {
            let join = a.join(b)?;
            if op.apply(&join)? != img_a.join(img_b)? {
                return Ok(false);
            }
        }
        for scalar in ctx.algebra().elements() {
            let constant = ctx.constant(scalar);
            let meet = constant.meet(a)?;
            if op.apply(&meet)? != constant.meet(img_a)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Read the relation off the singleton images: `R(x,y) = 𝒰(I_y)(x)`.
pub fn extract_relation(op: &AbstractOperator) -> FuzzyRelation {
    let ctx = op.context();
    let columns: Vec<FuzzySet> = ctx
        .universe()
        .points()
        .map(|y| op.apply(&ctx.singleton(y)).expect("same context"))
        .collect();
    ctx.relation_from_fn(|x, y| columns[y.index()].value(x))
}

/// Decide whether `op` is the upper approximation of a relation. Returns the
/// unique such relation, or `None` when the base axiom fails or the
/// re-induced operator differs from `op` somewhere.
pub fn represents_upper(
    op: &AbstractOperator,
    caps: EnumCaps,
) -> Result<Option<FuzzyRelation>, FuzzyError> {
    if !base_axiom_holds(op, caps)? {
        return Ok(None);
    }
    let r = extract_relation(op);
    for a in op.context().sets_capped(caps.sets)? {
        if upper(&r, &a)? != op.apply(&a)? {
            return Ok(None);
        }
    }
    Ok(Some(r))
}

/// The dual operator `A ↦ 𝒰(A')'`. Taking the dual twice returns an operator
/// that agrees with the original on every set.
pub fn dual_operator(op: &AbstractOperator) -> AbstractOperator {
    match op {
        AbstractOperator::Dual(inner) => (**inner).clone(),
        other => AbstractOperator::Dual(Box::new(other.clone())),
    }
}

/// Word bounds for a single-axiom characterization: `upper_bounds` are the
/// words `𝒮ⱼ` with `𝒰 ≤ 𝒮ⱼ` intended, `lower_bounds` the words `𝒯ₖ` with
/// `𝒯ₖ ≤ 𝒰` intended. The identity word is permitted (reflexivity is
/// `lower_bounds = [I]`). Empty lists give the base axiom alone.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct AxiomSpec {
    pub upper_bounds: Vec<OperatorWord>,
    pub lower_bounds: Vec<OperatorWord>,
}

impl AxiomSpec {
    pub fn new(upper_bounds: Vec<OperatorWord>, lower_bounds: Vec<OperatorWord>) -> AxiomSpec {
        AxiomSpec {
            upper_bounds,
            lower_bounds,
        }
    }
}

/// Evaluate the single-axiom characterization in its finite reduction: the
/// base axiom plus, for every set `A`, `𝒰(A) ≤ 𝒮ⱼ(A)` and `𝒯ₖ(A) ≤ 𝒰(A)`,
/// where the words act through the operators induced by the extracted
/// relation.
pub fn characterized_axiom_holds(
    op: &AbstractOperator,
    spec: &AxiomSpec,
    caps: EnumCaps,
) -> Result<bool, FuzzyError> {
    if !base_axiom_holds(op, caps)? {
        return Ok(false);
    }
    let r = extract_relation(op);
    for a in op.context().sets_capped(caps.sets)? {
        let image = op.apply(&a)?;
        for word in &spec.upper_bounds {
            if !image.le(&apply_word(&r, word, &a)?) {
                return Ok(false);
            }
        }
        for word in &spec.lower_bounds {
            if !apply_word(&r, word, &a)?.le(&image) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// The same characterization evaluated on the dual side: with
/// `𝒧 = A ↦ 𝒰(A')'`, the base axiom becomes `𝒧(𝟏) = 𝟏`, binary meet
/// preservation and constant-join compatibility, and each bound flips to its
/// dual word on the other side of `𝒧`. Always agrees with
/// [`characterized_axiom_holds`].
pub fn characterized_axiom_holds_dual(
    op: &AbstractOperator,
    spec: &AxiomSpec,
    caps: EnumCaps,
) -> Result<bool, FuzzyError> {
    let ctx = op.context();
    let l = dual_operator(op);
    if l.apply(&ctx.top_set())? != ctx.top_set() {
        return Ok(false);
    }
    let sets: Vec<FuzzySet> = ctx.sets_capped(caps.sets)?.collect();
    let images: Vec<FuzzySet> = sets.iter().map(|a| l.apply(a)).collect::<Result<_, _>>()?;
    for (a, img_a) in sets.iter().zip(&images) {
        for (b, img_b) in sets.iter().zip(&images) {
            if l.apply(&a.meet(b)?)? != img_a.meet(img_b)? {
                return Ok(false);
            }
        }
        for scalar in ctx.algebra().elements() {
            let constant = ctx.constant(scalar);
            if l.apply(&constant.join(a)?)? != constant.join(img_a)? {
                return Ok(false);
            }
        }
    }
    let r = extract_relation(op);
    for (a, img_a) in sets.iter().zip(&images) {
        for word in &spec.upper_bounds {
            if !apply_word(&r, &word.dual(), a)?.le(img_a) {
                return Ok(false);
            }
        }
        for word in &spec.lower_bounds {
            if !img_a.le(&apply_word(&r, &word.dual(), a)?) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Enumerate every singleton-generated operator over `ctx`, in lexicographic
/// order of the image assignment. There are `|F_L(U)|^|U|` of them.
pub fn singleton_operators(
    ctx: &Context,
    cap: usize,
) -> Result<impl Iterator<Item = AbstractOperator> + '_, FuzzyError> {
    let set_count = ctx.set_count();
    let n = ctx.universe().size() as u32;
    let total = set_count.pow(n);
    if total > cap as u128 {
        return Err(FuzzyError::EnumerationTooLarge {
            required: total,
            cap,
        });
    }
    let set_count = set_count as usize;
    Ok((0..total as usize).map(move |rank| {
        let mut images = Vec::with_capacity(n as usize);
        let mut r = rank;
        for _ in 0..n {
            images.push(ctx.set_by_rank(r % set_count));
            r /= set_count;
        }
        images.reverse();
        AbstractOperator::SingletonGenerated(SingletonImages {
            ctx: ctx.clone(),
            images,
        })
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::approx::lower;
    use crate::fuzzy::Universe;
    use crate::lattice::standard_algebra_arc;
    use crate::relations::{check_property, PropertyKind};
    use std::sync::Arc;

    fn ctx(algebra: &str, points: &[&str]) -> Context {
        Context::new(
            standard_algebra_arc(algebra).unwrap(),
            Arc::new(Universe::new(points).unwrap()),
        )
    }

    fn serial_relation(c: &Context) -> FuzzyRelation {
        let (a, b) = (
            c.algebra().element("a").unwrap(),
            c.algebra().element("b").unwrap(),
        );
        c.relation_from_fn(|x, y| if x == y { a } else { b })
    }

    #[test]
    fn induced_operator_agrees_with_upper_everywhere() {
        let c = ctx("m2_fix", &["x", "y"]);
        let r = serial_relation(&c);
        let op = operator_from_relation(&r);
        for a in c.sets().unwrap() {
            assert_eq!(op.apply(&a).unwrap(), upper(&r, &a).unwrap());
        }
        // Singleton images encode the relation's columns.
        for y in c.universe().points() {
            let img = op.apply(&c.singleton(y)).unwrap();
            for x in c.universe().points() {
                assert_eq!(img.value(x), r.value(x, y));
            }
        }
    }

    #[test]
    fn zero_relation_gives_constant_bottom_operator() {
        let c = ctx("m2_fix", &["x", "y"]);
        let r = c.relation_from_fn(|_, _| c.algebra().bottom());
        let op = operator_from_relation(&r);
        for a in c.sets().unwrap() {
            assert_eq!(op.apply(&a).unwrap(), c.bottom_set());
        }
        assert_eq!(extract_relation(&op), r);
    }

    #[test]
    fn identity_relation_gives_identity_operator() {
        let c = ctx("m2_fix", &["x", "y"]);
        let r = c.relation_from_fn(|x, y| {
            if x == y {
                c.algebra().top()
            } else {
                c.algebra().bottom()
            }
        });
        let op = operator_from_relation(&r);
        for a in c.sets().unwrap() {
            assert_eq!(op.apply(&a).unwrap(), a);
        }
    }

    #[test]
    fn base_axiom_holds_for_induced_and_fails_for_constant_top() {
        let c = ctx("m2_fix", &["x", "y"]);
        let caps = EnumCaps::default();
        let r = serial_relation(&c);
        assert!(base_axiom_holds(&operator_from_relation(&r), caps).unwrap());

        let top = c.top_set();
        let entries = vec![top.clone(); c.set_count() as usize];
        let const_top = AbstractOperator::extensional(c.clone(), entries).unwrap();
        assert!(!base_axiom_holds(&const_top, caps).unwrap());
        assert_eq!(represents_upper(&const_top, caps).unwrap(), None);
        // Its dual is the constant-bottom operator.
        let dual = dual_operator(&const_top);
        assert_eq!(dual.apply(&c.singleton_named("x").unwrap()).unwrap(), c.bottom_set());
    }

    #[test]
    fn extraction_round_trips_through_induction() {
        let c = ctx("chain3", &["x", "y"]);
        let caps = EnumCaps::default();
        for r in c.relations_capped(caps.relations).unwrap() {
            let op = operator_from_relation(&r);
            assert_eq!(extract_relation(&op), r);
            assert_eq!(represents_upper(&op, caps).unwrap(), Some(r));
        }
    }

    #[test]
    fn every_singleton_assignment_satisfies_the_base_axiom() {
        let c = ctx("m2_fix", &["x", "y"]);
        let caps = EnumCaps::default();
        let mut count = 0;
        for op in singleton_operators(&c, 1_000_000).unwrap() {
            assert!(base_axiom_holds(&op, caps).unwrap());
            count += 1;
        }
        assert_eq!(count, 256);
    }

    #[test]
    fn perturbed_table_is_rejected() {
        let c = ctx("m2_fix", &["x", "y"]);
        let caps = EnumCaps::default();
        let r = serial_relation(&c);
        let table = ExtensionalTable::tabulate(&operator_from_relation(&r)).unwrap();

        // Sanity: the untouched table still represents the relation.
        let intact = AbstractOperator::Extensional(table.clone());
        assert_eq!(represents_upper(&intact, caps).unwrap(), Some(r.clone()));

        // Change the image of the full set (not a singleton): extraction is
        // unchanged, so re-induction differs exactly at the changed entry.
        let full_rank = c.top_set().rank();
        let original = table.entries()[full_rank].clone();
        let altered = if original == c.bottom_set() {
            c.top_set()
        } else {
            c.bottom_set()
        };
        let perturbed = AbstractOperator::Extensional(
            table.with_entry(full_rank, altered).unwrap(),
        );
        assert_eq!(extract_relation(&perturbed), r);
        assert_eq!(represents_upper(&perturbed, caps).unwrap(), None);
    }

    #[test]
    fn dual_of_induced_upper_is_lower() {
        let c = ctx("chain3", &["x", "y"]);
        for r in c.relations_capped(1_000).unwrap() {
            let dual = dual_operator(&operator_from_relation(&r));
            for a in c.sets().unwrap() {
                assert_eq!(dual.apply(&a).unwrap(), lower(&r, &a).unwrap());
            }
        }
    }

    #[test]
    fn dual_is_an_involution_pointwise() {
        let c = ctx("m2_fix", &["x", "y"]);
        let op = operator_from_relation(&serial_relation(&c));
        let twice = dual_operator(&dual_operator(&op));
        for a in c.sets().unwrap() {
            assert_eq!(twice.apply(&a).unwrap(), op.apply(&a).unwrap());
        }
    }

    #[test]
    fn empty_axiom_spec_reduces_to_base_axiom() {
        let c = ctx("m2_fix", &["x", "y"]);
        let caps = EnumCaps::default();
        let spec = AxiomSpec::default();
        let op = operator_from_relation(&serial_relation(&c));
        assert_eq!(
            characterized_axiom_holds(&op, &spec, caps).unwrap(),
            base_axiom_holds(&op, caps).unwrap()
        );
    }

    #[test]
    fn mediate_axiom_matches_property() {
        let c = ctx("m2_fix", &["x", "y"]);
        let caps = EnumCaps::default();
        let spec = AxiomSpec::new(vec!["UU".parse().unwrap()], vec![]);
        let mediate = c.relation_from_fn(|_, _| c.algebra().top());
        assert!(check_property(&mediate, PropertyKind::Mediate).holds);
        assert!(characterized_axiom_holds(&operator_from_relation(&mediate), &spec, caps).unwrap());

        let not_mediate = serial_relation(&c);
        assert!(!check_property(&not_mediate, PropertyKind::Mediate).holds);
        assert!(
            !characterized_axiom_holds(&operator_from_relation(&not_mediate), &spec, caps)
                .unwrap()
        );
    }

    #[test]
    fn reflexive_axiom_via_identity_lower_bound() {
        let c = ctx("m2_fix", &["x", "y"]);
        let caps = EnumCaps::default();
        let spec = AxiomSpec::new(vec![], vec![OperatorWord::identity()]);
        let reflexive = c.relation_from_fn(|x, y| {
            if x == y {
                c.algebra().top()
            } else {
                c.algebra().element("a").unwrap()
            }
        });
        assert!(characterized_axiom_holds(&operator_from_relation(&reflexive), &spec, caps).unwrap());
        let irreflexive = serial_relation(&c);
        assert!(
            !characterized_axiom_holds(&operator_from_relation(&irreflexive), &spec, caps)
                .unwrap()
        );
    }

    #[test]
    fn dual_side_evaluation_agrees() {
        let c = ctx("chain3", &["x", "y"]);
        let caps = EnumCaps::default();
        let specs = [
            AxiomSpec::default(),
            AxiomSpec::new(vec!["UU".parse().unwrap()], vec![]),
            AxiomSpec::new(vec![], vec![OperatorWord::identity()]),
            AxiomSpec::new(
                vec!["UU".parse().unwrap(), "LU".parse().unwrap()],
                vec![OperatorWord::identity(), "UU".parse().unwrap()],
            ),
        ];
        for r in c.relations_capped(caps.relations).unwrap() {
            let op = operator_from_relation(&r);
            for spec in &specs {
                assert_eq!(
                    characterized_axiom_holds(&op, spec, caps).unwrap(),
                    characterized_axiom_holds_dual(&op, spec, caps).unwrap(),
                    "dual evaluation split on {r}"
                );
            }
        }
    }

    /// When the characterization holds, the combined identity
    /// `𝒰 = (𝒰 ∧ ⋀𝒮ⱼ) ∨ ⋁𝒯ₖ` holds pointwise as well.
    #[test]
    fn combined_identity_validates_empirically() {
        let c = ctx("m2_fix", &["x", "y"]);
        let caps = EnumCaps::default();
        let spec = AxiomSpec::new(
            vec!["UU".parse().unwrap(), "LU".parse().unwrap(), "UL".parse().unwrap()],
            vec![OperatorWord::identity(), "UU".parse().unwrap()],
        );
        let mut seen = 0;
        for r in c.relations_capped(caps.relations).unwrap() {
            let op = operator_from_relation(&r);
            if !characterized_axiom_holds(&op, &spec, caps).unwrap() {
                continue;
            }
            seen += 1;
            for a in c.sets().unwrap() {
                let image = op.apply(&a).unwrap();
                let mut meet_side = image.clone();
                for word in &spec.upper_bounds {
                    meet_side = meet_side.meet(&apply_word(&r, word, &a).unwrap()).unwrap();
                }
                let mut rhs = meet_side;
                for word in &spec.lower_bounds {
                    rhs = rhs.join(&apply_word(&r, word, &a).unwrap()).unwrap();
                }
                assert_eq!(image, rhs);
            }
        }
        assert!(seen > 0, "at least the full relation satisfies all five");
    }

    #[test]
    fn table_construction_is_validated() {
        let c = ctx("m2_fix", &["x", "y"]);
        let err = ExtensionalTable::new(c.clone(), vec![c.bottom_set()]).unwrap_err();
        assert!(matches!(err, ReconstructionError::TableSize { expected: 16, got: 1 }));

        let big = ctx("chain_n(20)", &["x", "y"]);
        let err = ExtensionalTable::tabulate(&operator_from_relation(
            &big.relation_from_fn(|_, _| big.algebra().top()),
        ))
        .unwrap_err();
        assert!(matches!(err, ReconstructionError::TableTooLarge { .. }));

        let err = SingletonImages::new(c.clone(), vec![c.bottom_set()]).unwrap_err();
        assert!(matches!(err, ReconstructionError::ImageCount { expected: 2, got: 1 }));
    }
}
