//! Operator laws over all fuzzy sets, verified by exhaustive enumeration.
//!
//! An [`OperatorLaw`] compares two operator words under `≤` or `=`,
//! quantified over every fuzzy set of a context. `law_holds` evaluates a law
//! against one relation; `sweep` checks, for every relation over a context,
//! that a property and its paired operator laws agree; and
//! `search_counterexample` hunts for a relation on which two predicates
//! disagree.
//!
//! Family-quantified laws are reduced to per-set laws: in a finite complete
//! lattice an arbitrary join is a finite fold of binary joins over the
//! enumerated sets, so nothing is lost.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::approx::{apply_word, OperatorWord, WordError};
use crate::fuzzy::{Context, EnumCaps, FuzzyError, FuzzyRelation, FuzzySet};
use crate::relations::{check_property, PropertyKind, UnsupportedKindError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CorrespondenceError {
    #[error(transparent)]
    Unsupported(#[from] UnsupportedKindError),
    #[error(transparent)]
    Fuzzy(#[from] FuzzyError),
    #[error(transparent)]
    Word(#[from] WordError),
    #[error("cannot parse predicate `{0}`")]
    BadPredicate(String),
}

/// How the two sides of a law are compared.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LawRelation {
    Le,
    Eq,
}

impl fmt::Display for LawRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LawRelation::Le => write!(f, "<="),
            LawRelation::Eq => write!(f, "="),
        }
    }
}

/// A schematic inequality between operator words, quantified over all fuzzy
/// sets: `lhs(A) ≤ rhs(A)` or `lhs(A) = rhs(A)` for every `A`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct OperatorLaw {
    pub lhs: OperatorWord,
    pub rhs: OperatorWord,
    pub relation: LawRelation,
}

impl OperatorLaw {
    pub fn le(lhs: OperatorWord, rhs: OperatorWord) -> OperatorLaw {
        OperatorLaw {
            lhs,
            rhs,
            relation: LawRelation::Le,
        }
    }

    pub fn eq(lhs: OperatorWord, rhs: OperatorWord) -> OperatorLaw {
        OperatorLaw {
            lhs,
            rhs,
            relation: LawRelation::Eq,
        }
    }

    /// The dual law: letters are swapped and, for `≤`, the sides flipped.
    /// A law holds for a relation exactly when its dual does.
    pub fn dual(&self) -> OperatorLaw {
        match self.relation {
            LawRelation::Le => OperatorLaw::le(self.rhs.dual(), self.lhs.dual()),
            LawRelation::Eq => OperatorLaw::eq(self.lhs.dual(), self.rhs.dual()),
        }
    }

    /// Evaluate the law at a single set.
    pub fn holds_at(&self, r: &FuzzyRelation, a: &FuzzySet) -> Result<bool, FuzzyError> {
        let lhs = apply_word(r, &self.lhs, a)?;
        let rhs = apply_word(r, &self.rhs, a)?;
        Ok(match self.relation {
            LawRelation::Le => lhs.le(&rhs),
            LawRelation::Eq => lhs == rhs,
        })
    }
}

impl fmt::Display for OperatorLaw {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}{}", self.lhs, self.relation, self.rhs)
    }
}

impl FromStr for OperatorLaw {
    type Err = CorrespondenceError;

    /// Parse `"LHS<=RHS"` or `"LHS=RHS"` with words over `{L, U, I}`.
    fn from_str(s: &str) -> Result<OperatorLaw, CorrespondenceError> {
        let (lhs, rhs, relation) = if let Some((l, r)) = s.split_once("<=") {
            (l, r, LawRelation::Le)
        } else if let Some((l, r)) = s.split_once('=') {
            (l, r, LawRelation::Eq)
        } else {
            return Err(CorrespondenceError::BadPredicate(s.into()));
        };
        Ok(OperatorLaw {
            lhs: lhs.trim().parse()?,
            rhs: rhs.trim().parse()?,
            relation,
        })
    }
}

/// A violating set together with both evaluated sides.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LawCounterexample {
    pub set: FuzzySet,
    pub lhs: FuzzySet,
    pub rhs: FuzzySet,
}

/// Outcome of checking a law over every fuzzy set of a context.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LawReport {
    pub law: OperatorLaw,
    pub holds_for_all: bool,
    pub counterexample: Option<LawCounterexample>,
}

/// Check `law` against every fuzzy set over the relation's context, in
/// lexicographic order; the first violating set is reported.
pub fn law_holds(
    r: &FuzzyRelation,
    law: &OperatorLaw,
    caps: EnumCaps,
) -> Result<LawReport, FuzzyError> {
    for set in r.context().sets_capped(caps.sets)? {
        let lhs = apply_word(r, &law.lhs, &set)?;
        let rhs = apply_word(r, &law.rhs, &set)?;
        let ok = match law.relation {
            LawRelation::Le => lhs.le(&rhs),
            LawRelation::Eq => lhs == rhs,
        };
        if !ok {
            return Ok(LawReport {
                law: law.clone(),
                holds_for_all: false,
                counterexample: Some(LawCounterexample { set, lhs, rhs }),
            });
        }
    }
    Ok(LawReport {
        law: law.clone(),
        holds_for_all: true,
        counterexample: None,
    })
}

/// The two laws paired with a property: the `𝖴`-form and its `𝖫`-dual.
///
/// - reflexive: `A ≤ 𝖴A` and `𝖫A ≤ A`
/// - De Morgan symmetric: `A ≤ 𝖫𝖴A` and `𝖴𝖫A ≤ A`
/// - transitive: `𝖴𝖴A ≤ 𝖴A` and `𝖫A ≤ 𝖫𝖫A`
/// - mediate: `𝖴A ≤ 𝖴𝖴A` and `𝖫𝖫A ≤ 𝖫A`
/// - Euclidean: `𝖴A ≤ 𝖫𝖴A` and `𝖴𝖫A ≤ 𝖫A`
/// - adjoint: `𝖴A ≤ 𝖴𝖫A` and `𝖫𝖴A ≤ 𝖫A`
/// - functional: `𝖴A ≤ 𝖫A` (self-dual)
pub fn paired_laws(kind: PropertyKind) -> Result<(OperatorLaw, OperatorLaw), UnsupportedKindError> {
    let word = |s: &str| s.parse::<OperatorWord>().expect("static word");
    let base = match kind {
        PropertyKind::Reflexive => OperatorLaw::le(word("I"), word("U")),
        PropertyKind::SymmetricDm => OperatorLaw::le(word("I"), word("LU")),
        PropertyKind::Transitive => OperatorLaw::le(word("UU"), word("U")),
        PropertyKind::Mediate => OperatorLaw::le(word("U"), word("UU")),
        PropertyKind::Euclidean => OperatorLaw::le(word("U"), word("LU")),
        PropertyKind::Adjoint => OperatorLaw::le(word("U"), word("UL")),
        PropertyKind::Functional => OperatorLaw::le(word("U"), word("L")),
        other => {
            return Err(UnsupportedKindError::new(
                other,
                "no all-sets operator law for",
            ))
        }
    };
    let dual = base.dual();
    Ok((base, dual))
}

/// Confirm the property/operator correspondence on one relation: the
/// property holds exactly when the `𝖴`-form law holds and exactly when its
/// `𝖫`-dual does.
pub fn correspondence_verified(
    r: &FuzzyRelation,
    kind: PropertyKind,
    caps: EnumCaps,
) -> Result<bool, CorrespondenceError> {
    let (law_u, law_l) = paired_laws(kind)?;
    let prop = check_property(r, kind).holds;
    let holds_u = law_holds(r, &law_u, caps)?.holds_for_all;
    let holds_l = law_holds(r, &law_l, caps)?.holds_for_all;
    Ok(prop == holds_u && prop == holds_l)
}

/// Aggregate counts from a relation sweep.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepReport {
    pub kind: PropertyKind,
    pub relations_checked: usize,
    pub agreements: usize,
    pub disagreements: usize,
    pub first_disagreement: Option<FuzzyRelation>,
}

/// Check the correspondence for `kind` on every relation over `ctx`.
pub fn sweep(
    ctx: &Context,
    kind: PropertyKind,
    caps: EnumCaps,
) -> Result<SweepReport, CorrespondenceError> {
    let mut report = SweepReport {
        kind,
        relations_checked: 0,
        agreements: 0,
        disagreements: 0,
        first_disagreement: None,
    };
    for r in ctx.relations_capped(caps.relations)? {
        report.relations_checked += 1;
        if correspondence_verified(&r, kind, caps)? {
            report.agreements += 1;
        } else {
            report.disagreements += 1;
            if report.first_disagreement.is_none() {
                report.first_disagreement = Some(r);
            }
        }
    }
    Ok(report)
}

/// A predicate on relations, used by counterexample search: either a
/// property check or an operator law quantified over all fuzzy sets.
#[derive(Debug, Clone, PartialEq)]
pub enum RelationPredicate {
    Property(PropertyKind),
    Law(OperatorLaw),
}

impl RelationPredicate {
    pub fn eval(&self, r: &FuzzyRelation, caps: EnumCaps) -> Result<bool, CorrespondenceError> {
        match self {
            RelationPredicate::Property(kind) => Ok(check_property(r, *kind).holds),
            RelationPredicate::Law(law) => Ok(law_holds(r, law, caps)?.holds_for_all),
        }
    }
}

impl fmt::Display for RelationPredicate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RelationPredicate::Property(kind) => write!(f, "{kind}"),
            RelationPredicate::Law(law) => write!(f, "{law}"),
        }
    }
}

impl FromStr for RelationPredicate {
    type Err = CorrespondenceError;

    /// Parse either a property name (`"serial_singleton"`) or a law
    /// (`"L<=U"`, `"UU=U"`).
    fn from_str(s: &str) -> Result<RelationPredicate, CorrespondenceError> {
        if s.contains('=') {
            Ok(RelationPredicate::Law(s.parse()?))
        } else {
            let kind = s
                .parse::<PropertyKind>()
                .map_err(|_| CorrespondenceError::BadPredicate(s.into()))?;
            Ok(RelationPredicate::Property(kind))
        }
    }
}

/// Find the first relation over `ctx`, in lexicographic order, on which the
/// two predicates disagree.
pub fn search_counterexample(
    ctx: &Context,
    left: &RelationPredicate,
    right: &RelationPredicate,
    caps: EnumCaps,
) -> Result<Option<FuzzyRelation>, CorrespondenceError> {
    for r in ctx.relations_capped(caps.relations)? {
        if left.eval(&r, caps)? != right.eval(&r, caps)? {
            return Ok(Some(r));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fuzzy::Universe;
    use crate::lattice::standard_algebra_arc;
    use std::sync::Arc;

    fn ctx(algebra: &str, points: &[&str]) -> Context {
        Context::new(
            standard_algebra_arc(algebra).unwrap(),
            Arc::new(Universe::new(points).unwrap()),
        )
    }

    fn law(s: &str) -> OperatorLaw {
        s.parse().unwrap()
    }

    #[test]
    fn law_parsing() {
        let l = law("L<=U");
        assert_eq!(l.relation, LawRelation::Le);
        assert_eq!(l.to_string(), "L<=U");
        assert_eq!(law("UU=U").relation, LawRelation::Eq);
        assert_eq!(law("I<=LU").lhs, OperatorWord::identity());
        assert!("garbage".parse::<OperatorLaw>().is_err());
    }

    #[test]
    fn serial_diamond_relation_breaks_lower_below_upper() {
        let c = ctx("m2_fix", &["x", "y"]);
        let (a, b) = (
            c.algebra().element("a").unwrap(),
            c.algebra().element("b").unwrap(),
        );
        let r = c.relation_from_fn(|x, y| if x == y { a } else { b });
        let report = law_holds(&r, &law("L<=U"), EnumCaps::default()).unwrap();
        assert!(!report.holds_for_all);
        let ce = report.counterexample.unwrap();
        assert!(!ce.lhs.le(&ce.rhs));
        // The set from the worked example is also a counterexample.
        let x = c.universe().point("x").unwrap();
        let witness = c.set_from_fn(|p| if p == x { b } else { a });
        assert!(!law("L<=U").holds_at(&r, &witness).unwrap());
    }

    #[test]
    fn constant_row_relation_fails_at_the_empty_set() {
        let c = ctx("m2_fix", &["x", "y"]);
        let (a, b) = (
            c.algebra().element("a").unwrap(),
            c.algebra().element("b").unwrap(),
        );
        let r = c.relation_from_fn(|x, _| if x.index() == 0 { a } else { b });
        let report = law_holds(&r, &law("L<=U"), EnumCaps::default()).unwrap();
        assert!(!report.holds_for_all);
        let ce = report.counterexample.unwrap();
        assert_eq!(ce.set, c.bottom_set());
        let x = c.universe().point("x").unwrap();
        assert_eq!(ce.lhs.value(x), a);
        assert_eq!(ce.rhs.value(x), c.algebra().bottom());
    }

    #[test]
    fn identity_law_always_holds() {
        let c = ctx("chain3", &["x", "y"]);
        for r in c.relations_capped(100).unwrap() {
            let report = law_holds(&r, &law("I=I"), EnumCaps::default()).unwrap();
            assert!(report.holds_for_all);
        }
    }

    #[test]
    fn enumeration_cap_is_enforced() {
        let c = ctx("chain_n(10)", &["x", "y", "z", "w", "v"]);
        let err = law_holds(
            &c.relation_from_fn(|_, _| c.algebra().top()),
            &law("L<=U"),
            EnumCaps::default(),
        )
        .unwrap_err();
        assert!(matches!(err, FuzzyError::EnumerationTooLarge { .. }));
    }

    #[test]
    fn paired_laws_exist_exactly_for_the_seven_kinds() {
        for kind in PropertyKind::ALL {
            let supported = PropertyKind::CORRESPONDENCE.contains(&kind);
            assert_eq!(paired_laws(kind).is_ok(), supported, "{kind}");
        }
        let (u_form, l_dual) = paired_laws(PropertyKind::Euclidean).unwrap();
        assert_eq!(u_form.to_string(), "U<=LU");
        assert_eq!(l_dual.to_string(), "UL<=L");
    }

    #[test]
    fn reflexive_and_transitive_verified_on_identity() {
        let c = ctx("m2_fix", &["x", "y"]);
        let r = c.relation_from_fn(|x, y| {
            if x == y {
                c.algebra().top()
            } else {
                c.algebra().bottom()
            }
        });
        assert!(correspondence_verified(&r, PropertyKind::Reflexive, EnumCaps::default()).unwrap());
        assert!(
            correspondence_verified(&r, PropertyKind::Transitive, EnumCaps::default()).unwrap()
        );
    }

    #[test]
    fn chain3_euclidean_sweep_is_clean() {
        let c = ctx("chain3", &["x", "y"]);
        let report = sweep(&c, PropertyKind::Euclidean, EnumCaps::default()).unwrap();
        assert_eq!(report.relations_checked, 81);
        assert_eq!(report.agreements, 81);
        assert_eq!(report.disagreements, 0);
        assert!(report.first_disagreement.is_none());
    }

    #[test]
    fn predicate_parsing() {
        assert_eq!(
            "serial".parse::<RelationPredicate>().unwrap(),
            RelationPredicate::Property(PropertyKind::Serial)
        );
        assert!(matches!(
            "L<=U".parse::<RelationPredicate>().unwrap(),
            RelationPredicate::Law(_)
        ));
        assert!("no_such_thing".parse::<RelationPredicate>().is_err());
    }

    #[test]
    fn search_finds_the_seriality_gap() {
        let c = ctx("m2_fix", &["x", "y"]);
        let left = RelationPredicate::Property(PropertyKind::SerialSingleton);
        let right = RelationPredicate::Law(law("L<=U"));
        let found = search_counterexample(&c, &left, &right, EnumCaps::default())
            .unwrap()
            .expect("the gap exists on this context");
        // The witness is sound: the two predicates really disagree on it.
        assert_ne!(
            left.eval(&found, EnumCaps::default()).unwrap(),
            right.eval(&found, EnumCaps::default()).unwrap()
        );
        // The all-sets law always implies the singleton condition, so the
        // disagreement must be singleton-holds / law-fails.
        assert!(left.eval(&found, EnumCaps::default()).unwrap());
    }

    #[test]
    fn search_on_equivalent_predicates_is_empty() {
        let c = ctx("m2_fix", &["x", "y"]);
        let left = RelationPredicate::Property(PropertyKind::Transitive);
        let right = RelationPredicate::Law(law("UU<=U"));
        assert_eq!(
            search_counterexample(&c, &left, &right, EnumCaps::default()).unwrap(),
            None
        );
        let serial = RelationPredicate::Property(PropertyKind::Serial);
        assert_eq!(
            search_counterexample(&c, &serial, &serial, EnumCaps::default()).unwrap(),
            None
        );
    }
}
