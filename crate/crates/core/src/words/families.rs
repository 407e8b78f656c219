//! Named identities and identity systems.

use super::{parse_word, Identity, Var, Word, WordError};

fn w(text: &str) -> Word {
    Word::letters(text)
}

fn x_pow(k: usize) -> Word {
    w("x").pow(k)
}

/// `x^2 = x^(n+2)`.
pub fn exp_n(n: usize) -> Identity {
    assert!(n >= 1);
    Identity::new(x_pow(2), x_pow(n + 2))
}

/// `xyx = (xy)^(n+1) x`.
pub fn exp_n_red(n: usize) -> Identity {
    assert!(n >= 1);
    Identity::new(w("xyx"), w("xy").pow(n + 1).concat(&w("x")))
}

/// `x^n y^n = y^n x^n`.
pub fn commut(n: usize) -> Identity {
    assert!(n >= 1);
    Identity::new(
        x_pow(n).concat(&w("y").pow(n)),
        w("y").pow(n).concat(&x_pow(n)),
    )
}

/// `x^2 y^2 = y^2 x^2`.
pub fn abelian1() -> Identity {
    commut(2)
}

/// `xyxzx = xzxyx`.
pub fn abelian2() -> Identity {
    Identity::new(w("xyxzx"), w("xzxyx"))
}

/// Identity basis of the 5-element Brandt semigroup:
/// `x^2 = x^3`, `xyx = xyxyx`, `x^2y^2 = y^2x^2`.
pub fn trahtman_basis() -> Vec<Identity> {
    vec![exp_n(1), exp_n_red(1), abelian1()]
}

/// Words `w` read as group identities `w = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PositiveBasis {
    words: Vec<Word>,
}

impl PositiveBasis {
    pub fn new(words: Vec<Word>) -> Option<Self> {
        (!words.is_empty()).then_some(PositiveBasis { words })
    }

    pub fn words(&self) -> &[Word] {
        &self.words
    }

    /// One word per line; blank lines and `#` comments are skipped.
    pub fn parse(text: &str) -> Result<Self, WordError> {
        let words = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'))
            .map(parse_word)
            .collect::<Result<Vec<_>, _>>()?;
        PositiveBasis::new(words).ok_or(WordError::Empty)
    }
}

/// `{x^n, x y x^(n-1) y^(n-1)}`: the power law and the commutator written
/// positively, a positive basis for abelian groups of exponent `n`.
pub fn abelian_positive_basis(n: usize) -> PositiveBasis {
    assert!(n >= 2);
    PositiveBasis {
        words: vec![
            x_pow(n),
            w("xy").concat(&x_pow(n - 1)).concat(&w("y").pow(n - 1)),
        ],
    }
}

/// `w^2 = w` for every basis word, followed by `x^2 = x^(n+2)`,
/// `xyx = (xy)^(n+1)x` and `x^n y^n = y^n x^n`.
pub fn theorem_basis(n: usize, basis: &PositiveBasis) -> Vec<Identity> {
    basis
        .words
        .iter()
        .map(|b| Identity::new(b.pow(2), b.clone()))
        .chain([exp_n(n), exp_n_red(n), commut(n)])
        .collect()
}

/// Basis for Brandt semigroups over abelian groups of exponent `n`.
pub fn abelian_corollary_basis(n: usize) -> Vec<Identity> {
    vec![exp_n(n), exp_n_red(n), abelian1(), abelian2()]
}

/// `x^2 y1..yn yn..y1 = y1..yn yn..y1 x^2`.
pub fn ln_identity(n: usize) -> Identity {
    assert!(n >= 1);
    let ys: Vec<Var> = (1..=n as u32).map(|i| Var::indexed('y', i)).collect();
    let mut palindrome = ys.clone();
    palindrome.extend(ys.iter().rev());
    let middle = Word::new(palindrome).expect("n >= 1");
    Identity::new(x_pow(2).concat(&middle), middle.concat(&x_pow(2)))
}
