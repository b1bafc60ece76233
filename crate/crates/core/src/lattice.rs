//! Finite lattices and De Morgan Heyting algebras.
//!
//! A lattice is built from its element names and a set of order pairs; the
//! constructor takes the reflexive-transitive closure, checks that the result
//! is a bounded lattice, and precomputes the join/meet tables. A
//! [`DmhAlgebra`] extends a distributive lattice with the derived Heyting
//! implication and a user-supplied antitone involution. All structure is
//! validated eagerly, so operations after construction are total and cheap:
//! every operation is a table lookup on dense indices.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use thiserror::Error;

/// Index of a lattice element. Only meaningful relative to the algebra that
/// produced it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Elem(pub(crate) usize);

impl Elem {
    pub fn index(self) -> usize {
        self.0
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LatticeError {
    #[error("lattice needs at least one element")]
    Empty,
    #[error("duplicate element `{0}`")]
    DuplicateElement(String),
    #[error("unknown element `{0}`")]
    UnknownElement(String),
    #[error("not a poset: antisymmetry fails for `{0}` and `{1}`")]
    NotAPoset(String, String),
    #[error("no {0} element")]
    NoBounds(&'static str),
    #[error("not a lattice: `{0}` and `{1}` have no least upper bound")]
    NoJoin(String, String),
    #[error("not a lattice: `{0}` and `{1}` have no greatest lower bound")]
    NoMeet(String, String),
    #[error("not distributive: fails on `{0}`, `{1}`, `{2}`")]
    NotDistributive(String, String, String),
    #[error("involution is not total: `{0}` has no image")]
    IncompleteInvolution(String),
    #[error("not an involution: `{0}`'' differs from `{0}`")]
    NotInvolutive(String),
    #[error("involution is not antitone: De Morgan law fails on `{0}`, `{1}`")]
    NotAntitone(String, String),
    #[error("unknown catalog id `{0}`")]
    UnknownCatalogId(String),
}

/// A finite bounded lattice with precomputed order and operation tables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteLattice {
    names: Vec<String>,
    leq: Vec<bool>,
    join: Vec<Elem>,
    meet: Vec<Elem>,
    bottom: Elem,
    top: Elem,
}

impl FiniteLattice {
    pub fn size(&self) -> usize {
        self.names.len()
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> + '_ {
        (0..self.names.len()).map(Elem)
    }

    /// Look up an element by name.
    pub fn element(&self, name: &str) -> Option<Elem> {
        self.names.iter().position(|n| n == name).map(Elem)
    }

    pub fn name(&self, e: Elem) -> &str {
        &self.names[e.0]
    }

    pub fn leq(&self, a: Elem, b: Elem) -> bool {
        self.leq[a.0 * self.size() + b.0]
    }

    pub fn join(&self, a: Elem, b: Elem) -> Elem {
        self.join[a.0 * self.size() + b.0]
    }

    pub fn meet(&self, a: Elem, b: Elem) -> Elem {
        self.meet[a.0 * self.size() + b.0]
    }

    pub fn bottom(&self) -> Elem {
        self.bottom
    }

    pub fn top(&self) -> Elem {
        self.top
    }

    /// Join of a finite family; the empty join is the bottom element.
    pub fn join_all(&self, elems: impl IntoIterator<Item = Elem>) -> Elem {
        elems.into_iter().fold(self.bottom, |acc, e| self.join(acc, e))
    }

    /// Meet of a finite family; the empty meet is the top element.
    pub fn meet_all(&self, elems: impl IntoIterator<Item = Elem>) -> Elem {
        elems.into_iter().fold(self.top, |acc, e| self.meet(acc, e))
    }

    /// Check the distributive law on all triples.
    fn check_distributive(&self) -> Result<(), LatticeError> {
        for a in self.elements() {
            for b in self.elements() {
                for c in self.elements() {
                    let lhs = self.meet(a, self.join(b, c));
                    let rhs = self.join(self.meet(a, b), self.meet(a, c));
                    if lhs != rhs {
                        return Err(LatticeError::NotDistributive(
                            self.name(a).into(),
                            self.name(b).into(),
                            self.name(c).into(),
                        ));
                    }
                }
            }
        }
        Ok(())
    }

    /// Derive the relative pseudocomplement table: `a ⇒ b` is the largest `c`
    /// with `a ∧ c ≤ b`. Requires distributivity.
    pub fn heyting_table(&self) -> Result<Vec<Elem>, LatticeError> {
        self.check_distributive()?;
        let n = self.size();
        let mut table = vec![Elem(0); n * n];
        for a in self.elements() {
            for b in self.elements() {
                let candidates = self
                    .elements()
                    .filter(|&c| self.leq(self.meet(a, c), b));
                table[a.0 * n + b.0] = self.join_all(candidates);
            }
        }
        // Residuation follows from distributivity in a finite lattice, but the
        // algebra promises it, so verify outright.
        for a in self.elements() {
            for b in self.elements() {
                let imp = table[a.0 * n + b.0];
                for c in self.elements() {
                    if self.leq(self.meet(a, c), b) != self.leq(c, imp) {
                        return Err(LatticeError::NotDistributive(
                            self.name(a).into(),
                            self.name(b).into(),
                            self.name(c).into(),
                        ));
                    }
                }
            }
        }
        Ok(table)
    }
}

/// Build a bounded lattice from element names and declared order pairs.
///
/// The declared pairs are closed under reflexivity and transitivity before
/// validation, so only the covering relations need to be listed.
pub fn build_lattice<S: AsRef<str>>(
    elements: &[S],
    leq_pairs: &[(S, S)],
) -> Result<FiniteLattice, LatticeError> {
    if elements.is_empty() {
        return Err(LatticeError::Empty);
    }
    let names: Vec<String> = elements.iter().map(|s| s.as_ref().to_owned()).collect();
    let mut index = BTreeMap::new();
    for (i, name) in names.iter().enumerate() {
        if index.insert(name.clone(), i).is_some() {
            return Err(LatticeError::DuplicateElement(name.clone()));
        }
    }
    let n = names.len();
    let mut leq = vec![false; n * n];
    for i in 0..n {
        leq[i * n + i] = true;
    }
    for (a, b) in leq_pairs {
        let ia = *index
            .get(a.as_ref())
            .ok_or_else(|| LatticeError::UnknownElement(a.as_ref().into()))?;
        let ib = *index
            .get(b.as_ref())
            .ok_or_else(|| LatticeError::UnknownElement(b.as_ref().into()))?;
        leq[ia * n + ib] = true;
    }
    // Transitive closure (Warshall).
    for k in 0..n {
        for i in 0..n {
            if leq[i * n + k] {
                for j in 0..n {
                    if leq[k * n + j] {
                        leq[i * n + j] = true;
                    }
                }
            }
        }
    }
    for i in 0..n {
        for j in (i + 1)..n {
            if leq[i * n + j] && leq[j * n + i] {
                return Err(LatticeError::NotAPoset(names[i].clone(), names[j].clone()));
            }
        }
    }
    // In a finite poset a unique minimal element is the least one, and dually.
    let minimal: Vec<usize> = (0..n)
        .filter(|&i| (0..n).all(|j| j == i || !leq[j * n + i]))
        .collect();
    let maximal: Vec<usize> = (0..n)
        .filter(|&i| (0..n).all(|j| j == i || !leq[i * n + j]))
        .collect();
    let bottom = match minimal.as_slice() {
        [b] => Elem(*b),
        _ => return Err(LatticeError::NoBounds("bottom")),
    };
    let top = match maximal.as_slice() {
        [t] => Elem(*t),
        _ => return Err(LatticeError::NoBounds("top")),
    };

    let mut join = vec![Elem(0); n * n];
    let mut meet = vec![Elem(0); n * n];
    for a in 0..n {
        for b in 0..n {
            let uppers: Vec<usize> = (0..n)
                .filter(|&c| leq[a * n + c] && leq[b * n + c])
                .collect();
            let lub = uppers
                .iter()
                .copied()
                .find(|&c| uppers.iter().all(|&d| leq[c * n + d]));
            join[a * n + b] = match lub {
                Some(c) => Elem(c),
                None => return Err(LatticeError::NoJoin(names[a].clone(), names[b].clone())),
            };
            let lowers: Vec<usize> = (0..n)
                .filter(|&c| leq[c * n + a] && leq[c * n + b])
                .collect();
            let glb = lowers
                .iter()
                .copied()
                .find(|&c| lowers.iter().all(|&d| leq[d * n + c]));
            meet[a * n + b] = match glb {
                Some(c) => Elem(c),
                None => return Err(LatticeError::NoMeet(names[a].clone(), names[b].clone())),
            };
        }
    }

    Ok(FiniteLattice {
        names,
        leq,
        join,
        meet,
        bottom,
        top,
    })
}

/// A De Morgan Heyting algebra: a distributive bounded lattice with its
/// relative pseudocomplement `⇒` and an antitone involution `'`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DmhAlgebra {
    lattice: FiniteLattice,
    implies: Vec<Elem>,
    neg: Vec<Elem>,
}

impl DmhAlgebra {
    pub fn lattice(&self) -> &FiniteLattice {
        &self.lattice
    }

    pub fn size(&self) -> usize {
        self.lattice.size()
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> + '_ {
        self.lattice.elements()
    }

    pub fn element(&self, name: &str) -> Option<Elem> {
        self.lattice.element(name)
    }

    pub fn name(&self, e: Elem) -> &str {
        self.lattice.name(e)
    }

    pub fn leq(&self, a: Elem, b: Elem) -> bool {
        self.lattice.leq(a, b)
    }

    pub fn join(&self, a: Elem, b: Elem) -> Elem {
        self.lattice.join(a, b)
    }

    pub fn meet(&self, a: Elem, b: Elem) -> Elem {
        self.lattice.meet(a, b)
    }

    pub fn bottom(&self) -> Elem {
        self.lattice.bottom()
    }

    pub fn top(&self) -> Elem {
        self.lattice.top()
    }

    pub fn join_all(&self, elems: impl IntoIterator<Item = Elem>) -> Elem {
        self.lattice.join_all(elems)
    }

    pub fn meet_all(&self, elems: impl IntoIterator<Item = Elem>) -> Elem {
        self.lattice.meet_all(elems)
    }

    /// Heyting implication `a ⇒ b`.
    pub fn implies(&self, a: Elem, b: Elem) -> Elem {
        self.implies[a.0 * self.size() + b.0]
    }

    /// The involution `a'`.
    pub fn neg(&self, a: Elem) -> Elem {
        self.neg[a.0]
    }

    /// De Morgan arrow `a → b := a' ∨ b`.
    pub fn arrow(&self, a: Elem, b: Elem) -> Elem {
        self.join(self.neg(a), b)
    }
}

impl fmt::Display for DmhAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DmhAlgebra{{")?;
        for (i, e) in self.elements().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", self.name(e))?;
        }
        write!(f, "}}")
    }
}

/// Attach an antitone involution to a distributive lattice, deriving the
/// Heyting implication along the way. The involution map must be total.
pub fn attach_involution<S: AsRef<str>>(
    lattice: FiniteLattice,
    neg_map: &[(S, S)],
) -> Result<DmhAlgebra, LatticeError> {
    let n = lattice.size();
    let mut neg: Vec<Option<Elem>> = vec![None; n];
    for (from, to) in neg_map {
        let f = lattice
            .element(from.as_ref())
            .ok_or_else(|| LatticeError::UnknownElement(from.as_ref().into()))?;
        let t = lattice
            .element(to.as_ref())
            .ok_or_else(|| LatticeError::UnknownElement(to.as_ref().into()))?;
        neg[f.0] = Some(t);
    }
    let neg: Vec<Elem> = neg
        .iter()
        .enumerate()
        .map(|(i, e)| e.ok_or_else(|| LatticeError::IncompleteInvolution(lattice.names[i].clone())))
        .collect::<Result<_, _>>()?;

    for e in lattice.elements() {
        if neg[neg[e.0].0] != e {
            return Err(LatticeError::NotInvolutive(lattice.name(e).into()));
        }
    }
    for a in lattice.elements() {
        for b in lattice.elements() {
            if neg[lattice.meet(a, b).0] != lattice.join(neg[a.0], neg[b.0]) {
                return Err(LatticeError::NotAntitone(
                    lattice.name(a).into(),
                    lattice.name(b).into(),
                ));
            }
        }
    }
    debug_assert_eq!(neg[lattice.bottom().0], lattice.top());
    debug_assert_eq!(neg[lattice.top().0], lattice.bottom());

    let implies = lattice.heyting_table()?;
    Ok(DmhAlgebra {
        lattice,
        implies,
        neg,
    })
}

fn diamond(swap: bool) -> Result<DmhAlgebra, LatticeError> {
    let lat = build_lattice(
        &["0", "a", "b", "1"],
        &[("0", "a"), ("0", "b"), ("a", "1"), ("b", "1")],
    )?;
    let neg: &[(&str, &str)] = if swap {
        &[("0", "1"), ("a", "b"), ("b", "a"), ("1", "0")]
    } else {
        &[("0", "1"), ("a", "a"), ("b", "b"), ("1", "0")]
    };
    attach_involution(lat, neg)
}

fn chain(names: &[String]) -> Result<DmhAlgebra, LatticeError> {
    let pairs: Vec<(String, String)> = names
        .windows(2)
        .map(|w| (w[0].clone(), w[1].clone()))
        .collect();
    let lat = build_lattice(names, &pairs)?;
    // Order-reversing mirror as the involution.
    let neg: Vec<(String, String)> = names
        .iter()
        .enumerate()
        .map(|(i, name)| (name.clone(), names[names.len() - 1 - i].clone()))
        .collect();
    attach_involution(lat, &neg)
}

fn chain_names(k: usize) -> Vec<String> {
    match k {
        0 => vec![],
        1 => vec!["0".into()],
        _ => {
            let mut names = vec!["0".to_string()];
            names.extend((1..k - 1).map(|i| format!("c{i}")));
            names.push("1".into());
            names
        }
    }
}

/// Construct one of the named standard algebras.
///
/// Known ids: `bool2` (two-element Boolean algebra), `chain3` (the chain
/// `0 < u < 1` with `u' = u`), `m2_fix` and `m2_swap` (the diamond
/// `0 < a,b < 1` with the fixed-point and the swapping involution), and
/// `chain_n(k)` (a `k`-element chain with the order-reversing mirror).
pub fn standard_algebra(name: &str) -> Result<DmhAlgebra, LatticeError> {
    match name {
        "bool2" => chain(&["0".into(), "1".into()]),
        "chain3" => chain(&["0".into(), "u".into(), "1".into()]),
        "m2_fix" => diamond(false),
        "m2_swap" => diamond(true),
        _ => {
            if let Some(arg) = name
                .strip_prefix("chain_n(")
                .and_then(|rest| rest.strip_suffix(')'))
            {
                let k: usize = arg
                    .parse()
                    .map_err(|_| LatticeError::UnknownCatalogId(name.into()))?;
                if k == 0 || k > 64 {
                    return Err(LatticeError::UnknownCatalogId(name.into()));
                }
                chain(&chain_names(k))
            } else {
                Err(LatticeError::UnknownCatalogId(name.into()))
            }
        }
    }
}

/// Convenience: a catalog algebra wrapped for sharing.
pub fn standard_algebra_arc(name: &str) -> Result<Arc<DmhAlgebra>, LatticeError> {
    standard_algebra(name).map(Arc::new)
}
