//! Rough approximation operators and composed operator words.
//!
//! Given a relation `R` and a set `A` over the same context:
//!
//! - upper: `(𝖴A)(x) = ⋁_y (R(x,y) ∧ A(y))`
//! - lower: `(𝖫A)(x) = ⋀_y (R(x,y)' ∨ A(y))`
//! - residuated lower: `(𝖫*A)(x) = ⋀_y (R(x,y) ⇒ A(y))`
//!
//! An [`OperatorWord`] composes `𝖫` and `𝖴`, written outermost first, so the
//! word `LU` sends `A` to `lower(upper(A))`. The empty word is the identity
//! and is written `I`.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::fuzzy::{FuzzyError, FuzzyRelation, FuzzySet};

/// Default cap on operator word length.
pub const DEFAULT_WORD_CAP: usize = 4;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WordError {
    #[error("operator word of length {len} exceeds the cap of {cap}")]
    TooLong { len: usize, cap: usize },
    #[error("invalid operator letter `{0}`; expected `L` or `U`")]
    InvalidLetter(char),
}

/// One approximation operator in a word.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Letter {
    Lower,
    Upper,
}

impl Letter {
    /// Swap `𝖫 ↔ 𝖴`.
    pub fn dual(self) -> Letter {
        match self {
            Letter::Lower => Letter::Upper,
            Letter::Upper => Letter::Lower,
        }
    }
}

/// A finite composition of `𝖫` and `𝖴`, outermost first. The empty word is
/// the identity operator.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct OperatorWord {
    letters: Vec<Letter>,
}

impl OperatorWord {
    pub fn new(letters: Vec<Letter>) -> Result<OperatorWord, WordError> {
        OperatorWord::with_cap(letters, DEFAULT_WORD_CAP)
    }

    pub fn with_cap(letters: Vec<Letter>, cap: usize) -> Result<OperatorWord, WordError> {
        if letters.len() > cap {
            return Err(WordError::TooLong {
                len: letters.len(),
                cap,
            });
        }
        Ok(OperatorWord { letters })
    }

    /// The identity word.
    pub fn identity() -> OperatorWord {
        OperatorWord { letters: vec![] }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// The dual word, with every letter swapped.
    pub fn dual(&self) -> OperatorWord {
        OperatorWord {
            letters: self.letters.iter().map(|l| l.dual()).collect(),
        }
    }

    /// All words of length at most `max_len`, shortest first.
    pub fn all_up_to(max_len: usize) -> Vec<OperatorWord> {
        let mut words = vec![OperatorWord::identity()];
        let mut frontier = vec![OperatorWord::identity()];
        for _ in 0..max_len {
            let mut next = Vec::new();
            for w in &frontier {
                for letter in [Letter::Lower, Letter::Upper] {
                    let mut letters = w.letters.clone();
                    letters.push(letter);
                    next.push(OperatorWord { letters });
                }
            }
            words.extend(next.iter().cloned());
            frontier = next;
        }
        words
    }
}

impl fmt::Display for OperatorWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "I");
        }
        for letter in &self.letters {
            match letter {
                Letter::Lower => write!(f, "L")?,
                Letter::Upper => write!(f, "U")?,
            }
        }
        Ok(())
    }
}

impl FromStr for OperatorWord {
    type Err = WordError;

    /// Parse a word over `{L, U}`; `I` (or the empty string) is the identity.
    fn from_str(s: &str) -> Result<OperatorWord, WordError> {
        if s == "I" {
            return Ok(OperatorWord::identity());
        }
        let letters = s
            .chars()
            .map(|c| match c {
                'L' => Ok(Letter::Lower),
                'U' => Ok(Letter::Upper),
                other => Err(WordError::InvalidLetter(other)),
            })
            .collect::<Result<Vec<_>, _>>()?;
        OperatorWord::new(letters)
    }
}

/// Upper approximation `𝖴(A)(x) = ⋁_y (R(x,y) ∧ A(y))`.
pub fn upper(r: &FuzzyRelation, a: &FuzzySet) -> Result<FuzzySet, FuzzyError> {
    if r.context() != a.context() {
        return Err(FuzzyError::MixedContext);
    }
    let ctx = r.context();
    let alg = ctx.algebra();
    Ok(ctx.set_from_fn(|x| {
        alg.join_all(
            ctx.universe()
                .points()
                .map(|y| alg.meet(r.value(x, y), a.value(y))),
        )
    }))
}

/// Lower approximation `𝖫(A)(x) = ⋀_y (R(x,y)' ∨ A(y))`.
pub fn lower(r: &FuzzyRelation, a: &FuzzySet) -> Result<FuzzySet, FuzzyError> {
    if r.context() != a.context() {
        return Err(FuzzyError::MixedContext);
    }
    let ctx = r.context();
    let alg = ctx.algebra();
    Ok(ctx.set_from_fn(|x| {
        alg.meet_all(
            ctx.universe()
                .points()
                .map(|y| alg.join(alg.neg(r.value(x, y)), a.value(y))),
        )
    }))
}

/// Residuated lower approximation `𝖫*(A)(x) = ⋀_y (R(x,y) ⇒ A(y))`.
pub fn lower_residuated(r: &FuzzyRelation, a: &FuzzySet) -> Result<FuzzySet, FuzzyError> {
    if r.context() != a.context() {
        return Err(FuzzyError::MixedContext);
    }
    let ctx = r.context();
    let alg = ctx.algebra();
    Ok(ctx.set_from_fn(|x| {
        alg.meet_all(
            ctx.universe()
                .points()
                .map(|y| alg.implies(r.value(x, y), a.value(y))),
        )
    }))
}

/// Apply a composed operator word, outermost first: `apply_word(R, LU, A)`
/// computes `lower(R, upper(R, A))`. The empty word returns `A` unchanged.
pub fn apply_word(
    r: &FuzzyRelation,
    word: &OperatorWord,
    a: &FuzzySet,
) -> Result<FuzzySet, FuzzyError> {
    if r.context() != a.context() {
        return Err(FuzzyError::MixedContext);
    }
    let mut acc = a.clone();
    for letter in word.letters().iter().rev() {
        acc = match letter {
            Letter::Lower => lower(r, &acc)?,
            Letter::Upper => upper(r, &acc)?,
        };
    }
    Ok(acc)
}
