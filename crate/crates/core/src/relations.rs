//! Relation properties and their operator-level characterizations.
//!
//! Each property is a quantified lattice (in)equality over the relation's
//! values. `check_property` evaluates the defining condition exactly and, on
//! failure, reports the first violating point tuple in declared order
//! together with the two sides of the failed comparison.
//!
//! Two symmetry notions are kept first-class and independent:
//!
//! - classical: `R(x,y) = R(y,x)` for all pairs;
//! - De Morgan: `R(x,y)' ∨ R(y,x) = 1` for all pairs.
//!
//! On the chain `0 < u < 1` with `R(x,y) = R(y,x) = u`, `R(x,x) = 0`,
//! `R(y,y) = 1` the classical condition holds while the De Morgan one
//! evaluates to `u ∨ u = u ≠ 1`. Conversely, on the diamond with the
//! fixed-point involution, `R(x,y) = a`, `R(y,x) = b` satisfies the De Morgan
//! condition (`a ∨ b = 1`) but not the classical one. With the swapping
//! (Boolean) involution on the same matrix, direct evaluation gives
//! `R(x,y)' ∨ R(y,x) = b ∨ b = b ≠ 1`, so there the De Morgan condition fails
//! as well: over a Boolean algebra the two notions coincide.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::approx::{lower, upper};
use crate::fuzzy::{FuzzyRelation, Point};

/// The relation properties this crate can check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PropertyKind {
    /// `⋁_y R(x,y) = 1` for all `x`.
    Serial,
    /// For every `x` there is `y` with `R(x,y) = 1`.
    SerialPointed,
    /// `R(x,y)' ≤ ⋁_{z≠y} R(x,z)` for all `x, y`.
    SerialSingleton,
    /// `R(x,x) = 1` for all `x`.
    Reflexive,
    /// `R(x,y)' ∨ R(y,x) = 1` for all `x, y`.
    SymmetricDm,
    /// `R(x,y) = R(y,x)` for all `x, y`.
    SymmetricClassical,
    /// `R(x,z) ∧ R(z,y) ≤ R(x,y)` for all `x, z, y`.
    Transitive,
    /// `R(x,y) ≤ ⋁_z (R(x,z) ∧ R(z,y))` for all `x, y`.
    Mediate,
    /// `R(x,y)' ≥ ⋁_z (R(x,z) ∧ R(z,y)')` for all `x, y`.
    Euclidean,
    /// `R(x,y)' ≥ ⋀_z ⋁_{w≠y} (R(x,z)' ∨ R(z,w))` for all `x, y`.
    Adjoint,
    /// `R(x,y) ≤ ⋀_{z≠y} R(x,z)'` for all `x, y`.
    Functional,
    /// `R(x,y)' ≤ ⋁_z (R(x,z) ∧ R(z,y)')` for all `x, y`.
    PositiveAlliance,
}

impl PropertyKind {
    pub const ALL: [PropertyKind; 12] = [
        PropertyKind::Serial,
        PropertyKind::SerialPointed,
        PropertyKind::SerialSingleton,
        PropertyKind::Reflexive,
        PropertyKind::SymmetricDm,
        PropertyKind::SymmetricClassical,
        PropertyKind::Transitive,
        PropertyKind::Mediate,
        PropertyKind::Euclidean,
        PropertyKind::Adjoint,
        PropertyKind::Functional,
        PropertyKind::PositiveAlliance,
    ];

    /// The seven kinds whose property/operator-law correspondence holds over
    /// all fuzzy sets.
    pub const CORRESPONDENCE: [PropertyKind; 7] = [
        PropertyKind::Reflexive,
        PropertyKind::SymmetricDm,
        PropertyKind::Transitive,
        PropertyKind::Mediate,
        PropertyKind::Euclidean,
        PropertyKind::Adjoint,
        PropertyKind::Functional,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            PropertyKind::Serial => "serial",
            PropertyKind::SerialPointed => "serial_pointed",
            PropertyKind::SerialSingleton => "serial_singleton",
            PropertyKind::Reflexive => "reflexive",
            PropertyKind::SymmetricDm => "symmetric_dm",
            PropertyKind::SymmetricClassical => "symmetric_classical",
            PropertyKind::Transitive => "transitive",
            PropertyKind::Mediate => "mediate",
            PropertyKind::Euclidean => "euclidean",
            PropertyKind::Adjoint => "adjoint",
            PropertyKind::Functional => "functional",
            PropertyKind::PositiveAlliance => "positive_alliance",
        }
    }
}

impl fmt::Display for PropertyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for PropertyKind {
    type Err = UnsupportedKindError;

    fn from_str(s: &str) -> Result<PropertyKind, UnsupportedKindError> {
        PropertyKind::ALL
            .into_iter()
            .find(|k| k.as_str() == s)
            .ok_or_else(|| UnsupportedKindError {
                kind: s.to_owned(),
                reason: "unknown property kind",
            })
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("{reason}: `{kind}`")]
pub struct UnsupportedKindError {
    pub kind: String,
    pub reason: &'static str,
}

impl UnsupportedKindError {
    pub(crate) fn new(kind: PropertyKind, reason: &'static str) -> UnsupportedKindError {
        UnsupportedKindError {
            kind: kind.as_str().to_owned(),
            reason,
        }
    }
}

/// The first violating point tuple and the two sides of the comparison that
/// failed there, as element names.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub points: Vec<String>,
    pub lhs: String,
    pub rhs: String,
}

/// Outcome of a property check. A witness is present exactly when the
/// property fails.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PropertyReport {
    pub kind: PropertyKind,
    pub holds: bool,
    pub witness: Option<Witness>,
}

impl PropertyReport {
    fn holds(kind: PropertyKind) -> PropertyReport {
        PropertyReport {
            kind,
            holds: true,
            witness: None,
        }
    }

    fn fails(kind: PropertyKind, witness: Witness) -> PropertyReport {
        PropertyReport {
            kind,
            holds: false,
            witness: Some(witness),
        }
    }
}

/// Evaluate the defining condition of `kind` on `r` exactly. The witness, if
/// any, is the first violating tuple when points are scanned in declared
/// order (for `transitive` the scan order is `x, z, y`, matching the path
/// `x → z → y`).
pub fn check_property(r: &FuzzyRelation, kind: PropertyKind) -> PropertyReport {
    let ctx = r.context();
    let alg = ctx.algebra();
    let u = ctx.universe();
    let name = |e| alg.name(e).to_owned();
    let pname = |p| u.name(p).to_owned();

    match kind {
        PropertyKind::Serial => {
            for x in u.points() {
                let row = alg.join_all(u.points().map(|y| r.value(x, y)));
                if row != alg.top() {
                    return PropertyReport::fails(
                        kind,
                        Witness {
                            points: vec![pname(x)],
                            lhs: name(row),
                            rhs: name(alg.top()),
                        },
                    );
                }
            }
            PropertyReport::holds(kind)
        }
        PropertyKind::SerialPointed => {
            for x in u.points() {
                if !u.points().any(|y| r.value(x, y) == alg.top()) {
                    let best = alg.join_all(u.points().map(|y| r.value(x, y)));
                    return PropertyReport::fails(
                        kind,
                        Witness {
                            points: vec![pname(x)],
                            lhs: name(best),
                            rhs: name(alg.top()),
                        },
                    );
                }
            }
            PropertyReport::holds(kind)
        }
        PropertyKind::SerialSingleton => {
            for x in u.points() {
                for y in u.points() {
                    let lhs = alg.neg(r.value(x, y));
                    let rhs =
                        alg.join_all(u.points().filter(|&z| z != y).map(|z| r.value(x, z)));
                    if !alg.leq(lhs, rhs) {
                        return PropertyReport::fails(
                            kind,
                            Witness {
                                points: vec![pname(x), pname(y)],
                                lhs: name(lhs),
                                rhs: name(rhs),
                            },
                        );
                    }
                }
            }
            PropertyReport::holds(kind)
        }
        PropertyKind::Reflexive => {
            for x in u.points() {
                if r.value(x, x) != alg.top() {
                    return PropertyReport::fails(
                        kind,
                        Witness {
                            points: vec![pname(x)],
                            lhs: name(r.value(x, x)),
                            rhs: name(alg.top()),
                        },
                    );
                }
            }
            PropertyReport::holds(kind)
        }
        PropertyKind::SymmetricDm => {
            for x in u.points() {
                for y in u.points() {
                    let value = alg.join(alg.neg(r.value(x, y)), r.value(y, x));
                    if value != alg.top() {
                        return PropertyReport::fails(
                            kind,
                            Witness {
                                points: vec![pname(x), pname(y)],
                                lhs: name(value),
                                rhs: name(alg.top()),
                            },
                        );
                    }
                }
            }
            PropertyReport::holds(kind)
        }
        PropertyKind::SymmetricClassical => {
            for x in u.points() {
                for y in u.points() {
                    if r.value(x, y) != r.value(y, x) {
                        return PropertyReport::fails(
                            kind,
                            Witness {
                                points: vec![pname(x), pname(y)],
                                lhs: name(r.value(x, y)),
                                rhs: name(r.value(y, x)),
                            },
                        );
                    }
                }
            }
            PropertyReport::holds(kind)
        }
        PropertyKind::Transitive => {
            for x in u.points() {
                for z in u.points() {
                    for y in u.points() {
                        let step = alg.meet(r.value(x, z), r.value(z, y));
                        if !alg.leq(step, r.value(x, y)) {
                            return PropertyReport::fails(
                                kind,
                                Witness {
                                    points: vec![pname(x), pname(z), pname(y)],
                                    lhs: name(step),
                                    rhs: name(r.value(x, y)),
                                },
                            );
                        }
                    }
                }
            }
            PropertyReport::holds(kind)
        }
        PropertyKind::Mediate => {
            for x in u.points() {
                for y in u.points() {
                    let via = alg.join_all(
                        u.points()
                            .map(|z| alg.meet(r.value(x, z), r.value(z, y))),
                    );
                    if !alg.leq(r.value(x, y), via) {
                        return PropertyReport::fails(
                            kind,
                            Witness {
                                points: vec![pname(x), pname(y)],
                                lhs: name(r.value(x, y)),
                                rhs: name(via),
                            },
                        );
                    }
                }
            }
            PropertyReport::holds(kind)
        }
        PropertyKind::Euclidean => {
            for x in u.points() {
                for y in u.points() {
                    let lhs = alg.join_all(
                        u.points()
                            .map(|z| alg.meet(r.value(x, z), alg.neg(r.value(z, y)))),
                    );
                    let rhs = alg.neg(r.value(x, y));
                    if !alg.leq(lhs, rhs) {
                        return PropertyReport::fails(
                            kind,
                            Witness {
                                points: vec![pname(x), pname(y)],
                                lhs: name(lhs),
                                rhs: name(rhs),
                            },
                        );
                    }
                }
            }
            PropertyReport::holds(kind)
        }
        PropertyKind::Adjoint => {
            for x in u.points() {
                for y in u.points() {
                    let lhs = alg.meet_all(u.points().map(|z| {
                        alg.join_all(
                            u.points()
                                .filter(|&w| w != y)
                                .map(|w| alg.join(alg.neg(r.value(x, z)), r.value(z, w))),
                        )
                    }));
                    let rhs = alg.neg(r.value(x, y));
                    if !alg.leq(lhs, rhs) {
                        return PropertyReport::fails(
                            kind,
                            Witness {
                                points: vec![pname(x), pname(y)],
                                lhs: name(lhs),
                                rhs: name(rhs),
                            },
                        );
                    }
                }
            }
            PropertyReport::holds(kind)
        }
        PropertyKind::Functional => {
            for x in u.points() {
                for y in u.points() {
                    let rhs = alg.meet_all(
                        u.points()
                            .filter(|&z| z != y)
                            .map(|z| alg.neg(r.value(x, z))),
                    );
                    if !alg.leq(r.value(x, y), rhs) {
                        return PropertyReport::fails(
                            kind,
                            Witness {
                                points: vec![pname(x), pname(y)],
                                lhs: name(r.value(x, y)),
                                rhs: name(rhs),
                            },
                        );
                    }
                }
            }
            PropertyReport::holds(kind)
        }
        PropertyKind::PositiveAlliance => {
            for x in u.points() {
                for y in u.points() {
                    let lhs = alg.neg(r.value(x, y));
                    let rhs = alg.join_all(
                        u.points()
                            .map(|z| alg.meet(r.value(x, z), alg.neg(r.value(z, y)))),
                    );
                    if !alg.leq(lhs, rhs) {
                        return PropertyReport::fails(
                            kind,
                            Witness {
                                points: vec![pname(x), pname(y)],
                                lhs: name(lhs),
                                rhs: name(rhs),
                            },
                        );
                    }
                }
            }
            PropertyReport::holds(kind)
        }
    }
}

/// Re-evaluate the defining condition of `kind` at one point tuple. Used to
/// confirm that a reported witness is a genuine violation.
pub fn witness_violates(r: &FuzzyRelation, kind: PropertyKind, points: &[Point]) -> bool {
    let alg = r.context().algebra();
    let u = r.context().universe();
    match (kind, points) {
        (PropertyKind::Serial, [x]) => {
            alg.join_all(u.points().map(|y| r.value(*x, y))) != alg.top()
        }
        (PropertyKind::SerialPointed, [x]) => {
            !u.points().any(|y| r.value(*x, y) == alg.top())
        }
        (PropertyKind::SerialSingleton, [x, y]) => {
            let rhs = alg.join_all(u.points().filter(|z| z != y).map(|z| r.value(*x, z)));
            !alg.leq(alg.neg(r.value(*x, *y)), rhs)
        }
        (PropertyKind::Reflexive, [x]) => r.value(*x, *x) != alg.top(),
        (PropertyKind::SymmetricDm, [x, y]) => {
            alg.join(alg.neg(r.value(*x, *y)), r.value(*y, *x)) != alg.top()
        }
        (PropertyKind::SymmetricClassical, [x, y]) => r.value(*x, *y) != r.value(*y, *x),
        (PropertyKind::Transitive, [x, z, y]) => {
            !alg.leq(alg.meet(r.value(*x, *z), r.value(*z, *y)), r.value(*x, *y))
        }
        (PropertyKind::Mediate, [x, y]) => {
            let via = alg.join_all(u.points().map(|z| alg.meet(r.value(*x, z), r.value(z, *y))));
            !alg.leq(r.value(*x, *y), via)
        }
        (PropertyKind::Euclidean, [x, y]) => {
            let lhs =
                alg.join_all(u.points().map(|z| alg.meet(r.value(*x, z), alg.neg(r.value(z, *y)))));
            !alg.leq(lhs, alg.neg(r.value(*x, *y)))
        }
        (PropertyKind::Adjoint, [x, y]) => {
            let lhs = alg.meet_all(u.points().map(|z| {
                alg.join_all(
                    u.points()
                        .filter(|w| w != y)
                        .map(|w| alg.join(alg.neg(r.value(*x, z)), r.value(z, w))),
                )
            }));
            !alg.leq(lhs, alg.neg(r.value(*x, *y)))
        }
        (PropertyKind::Functional, [x, y]) => {
            let rhs = alg.meet_all(u.points().filter(|z| z != y).map(|z| alg.neg(r.value(*x, z))));
            !alg.leq(r.value(*x, *y), rhs)
        }
        (PropertyKind::PositiveAlliance, [x, y]) => {
            let rhs =
                alg.join_all(u.points().map(|z| alg.meet(r.value(*x, z), alg.neg(r.value(z, *y)))));
            !alg.leq(alg.neg(r.value(*x, *y)), rhs)
        }
        _ => false,
    }
}

/// Resolve a witness back to point indices in the relation's universe.
pub fn witness_points(r: &FuzzyRelation, witness: &Witness) -> Option<Vec<Point>> {
    witness
        .points
        .iter()
        .map(|name| r.context().universe().point(name))
        .collect()
}

/// Evaluate the operator-level characterization of `kind`: a condition on
/// the approximations of singletons (or of the full set, for seriality) that
/// holds exactly when the property does.
///
/// - serial: `𝖴(𝟏) = 𝟏`
/// - serial singleton: `𝖫(I_x) ≤ 𝖴(I_x)` for all `x`
/// - reflexive: `I_x ≤ 𝖴(I_x)`
/// - De Morgan symmetric: `I_x ≤ 𝖫𝖴(I_x)`
/// - transitive: `𝖴𝖴(I_x) ≤ 𝖴(I_x)`
/// - mediate: `𝖴(I_x) ≤ 𝖴𝖴(I_x)`
/// - Euclidean: `𝖴(I_x) ≤ 𝖫𝖴(I_x)`
/// - adjoint: `𝖴(I_x) ≤ 𝖴𝖫(I_x)`
/// - functional: `𝖴(I_x) ≤ 𝖫(I_x)`
/// - positive alliance: `𝖫𝖴(I_x) ≤ 𝖴(I_x)`
///
/// Pointed seriality and classical symmetry have no such characterization.
pub fn singleton_characterization(
    r: &FuzzyRelation,
    kind: PropertyKind,
) -> Result<bool, UnsupportedKindError> {
    let ctx = r.context();
    if kind == PropertyKind::Serial {
        let top = ctx.top_set();
        return Ok(upper(r, &top).expect("same context") == top);
    }
    let check = |f: &dyn Fn(&crate::fuzzy::FuzzySet) -> bool| ctx
        .universe()
        .points()
        .map(|x| ctx.singleton(x))
        .all(|ix| f(&ix));
    let up = |s: &crate::fuzzy::FuzzySet| upper(r, s).expect("same context");
    let low = |s: &crate::fuzzy::FuzzySet| lower(r, s).expect("same context");
    match kind {
        PropertyKind::SerialSingleton => Ok(check(&|ix| low(ix).le(&up(ix)))),
        PropertyKind::Reflexive => Ok(check(&|ix| ix.le(&up(ix)))),
        PropertyKind::SymmetricDm => Ok(check(&|ix| ix.le(&low(&up(ix))))),
        PropertyKind::Transitive => Ok(check(&|ix| up(&up(ix)).le(&up(ix)))),
        PropertyKind::Mediate => Ok(check(&|ix| up(ix).le(&up(&up(ix))))),
        PropertyKind::Euclidean => Ok(check(&|ix| up(ix).le(&low(&up(ix))))),
        PropertyKind::Adjoint => Ok(check(&|ix| up(ix).le(&up(&low(ix))))),
        PropertyKind::Functional => Ok(check(&|ix| up(ix).le(&low(ix)))),
        PropertyKind::PositiveAlliance => Ok(check(&|ix| low(&up(ix)).le(&up(ix)))),
        PropertyKind::Serial => unreachable!("handled above"),
        PropertyKind::SerialPointed | PropertyKind::SymmetricClassical => Err(
            UnsupportedKindError::new(kind, "no singleton characterization for"),
        ),
    }
}
