use thiserror::Error;

use super::{Direction, RewriteTrace, RuleTag, Substitution};
use crate::words::{exp_n_red, is_repeated, Var, Word};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CellError {
    #[error("{0} occurs in no factor of the form zpz")]
    NotRepeated(Var),
    #[error("{0} occurs only once")]
    HasSingleOccurrence(Var),
    #[error("the star word is empty")]
    EmptyStar,
    #[error("exponent must be at least 1")]
    ZeroExponent,
    #[error("cell heads must be pairwise distinct, {0} repeats")]
    RepeatedHead(Var),
    #[error("a cell form needs at least one cell")]
    NoCells,
}

/// A product of cells `y1 p1 y1 . y2 p2 y2 ... yk pk yk` with pairwise
/// distinct heads `yt` and possibly empty bodies `pt`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CellForm {
    cells: Vec<(Var, Vec<Var>)>,
    exponent_n: usize,
}

impl CellForm {
    pub fn new(cells: Vec<(Var, Vec<Var>)>, exponent_n: usize) -> Result<Self, CellError> {
        if exponent_n == 0 {
            return Err(CellError::ZeroExponent);
        }
        if cells.is_empty() {
            return Err(CellError::NoCells);
        }
        for (i, (y, _)) in cells.iter().enumerate() {
            if cells[..i].iter().any(|(h, _)| h == y) {
                return Err(CellError::RepeatedHead(*y));
            }
        }
        Ok(CellForm { cells, exponent_n })
    }

    pub fn cells(&self) -> &[(Var, Vec<Var>)] {
        &self.cells
    }

    pub fn exponent_n(&self) -> usize {
        self.exponent_n
    }

    pub fn flatten(&self) -> Word {
        Word::new(flatten(&self.cells)).expect("at least one cell")
    }
}

fn flatten(cells: &[(Var, Vec<Var>)]) -> Vec<Var> {
    let mut out = Vec::new();
    for (y, p) in cells {
        out.push(*y);
        out.extend_from_slice(p);
        out.push(*y);
    }
    out
}

fn count(s: &[Var], v: Var) -> usize {
    s.iter().filter(|&&x| x == v).count()
}

fn exp_n_red_step(
    trace: &mut RewriteTrace,
    w: &Word,
    n: usize,
    position: usize,
    z: Var,
    p: &[Var],
) -> Word {
    let sub = Substitution::from_pairs([
        (Var::new('x'), Word::var(z)),
        (Var::new('y'), Word::new(p.to_vec()).expect("body is nonempty")),
    ]);
    trace.push(w, RuleTag::ExpNRed, &exp_n_red(n), position, sub, Direction::LeftToRight)
}

/// Repeatedly takes the leftmost variable occurring once, picks the shortest
/// factor `zpz` around it and replaces that factor by `(zp)^(n+1) z`, until
/// every variable occurs at least twice.
pub fn eliminate_single_occurrences(w: &Word, n: usize) -> Result<(Word, RewriteTrace), CellError> {
    if n == 0 {
        return Err(CellError::ZeroExponent);
    }
    if let (false, Some(v)) = is_repeated(w) {
        return Err(CellError::NotRepeated(v));
    }
    let mut current = w.clone();
    let mut trace = RewriteTrace::new();
    loop {
        let s = current.symbols();
        let Some(p) = (0..s.len()).find(|&i| count(s, s[i]) == 1) else {
            return Ok((current, trace));
        };
        // shortest span (a, b) with a < p < b and s[a] == s[b]; ties go left
        let cell = (0..p)
            .filter_map(|a| (p + 1..s.len()).find(|&b| s[b] == s[a]).map(|b| (b - a, a, b)))
            .min();
        let Some((_, a, b)) = cell else {
            return Err(CellError::NotRepeated(s[p]));
        };
        let (z, body) = (s[a], s[a + 1..b].to_vec());
        current = exp_n_red_step(&mut trace, &current, n, a, z, &body);
    }
}

/// Rewrites a word in which every variable occurs at least twice into a
/// product of cells, using only `xyx = (xy)^(n+1)x`.
///
/// The head of each new cell is the leftmost variable of the unprocessed
/// remainder. If it recurs there, the cell ends at its rightmost occurrence.
/// Otherwise its rightmost earlier occurrence lies in the body of some cell
/// `t`, say `pt = r y s`, and the factor `y s'  y` with
/// `s' = s yt (cells after t)` becomes `(y s')^(n+1) y`. This leaves
/// `pt = r (y s')^(n-1) y s`, keeps the cells after `t`, and appends the
/// cell `y s' y`.
pub fn cell_decompose(w: &Word, n: usize) -> Result<(CellForm, RewriteTrace), CellError> {
    if n == 0 {
        return Err(CellError::ZeroExponent);
    }
    let s = w.symbols();
    if let Some(&v) = s.iter().find(|&&v| count(s, v) == 1) {
        return Err(CellError::HasSingleOccurrence(v));
    }
    let mut cells: Vec<(Var, Vec<Var>)> = Vec::new();
    let mut remainder: &[Var] = s;
    let mut current = w.clone();
    let mut trace = RewriteTrace::new();
    while let Some(&y) = remainder.first() {
        if let Some(last) = remainder.iter().rposition(|&v| v == y).filter(|&i| i > 0) {
            cells.push((y, remainder[1..last].to_vec()));
            remainder = &remainder[last + 1..];
            continue;
        }
        // y occurs earlier, necessarily inside a body since heads are
        // absent from the remainder
        let (t, j) = cells
            .iter()
            .enumerate()
            .rev()
            .find_map(|(t, (_, body))| body.iter().rposition(|&v| v == y).map(|j| (t, j)))
            .expect("every variable occurs at least twice");
        let (head_t, body_t) = cells[t].clone();
        let (r, tail) = (&body_t[..j], &body_t[j + 1..]);
        let mut s_prime = tail.to_vec();
        s_prime.push(head_t);
        s_prime.extend(flatten(&cells[t + 1..]));
        let position = flatten(&cells[..t]).len() + 1 + j;
        current = exp_n_red_step(&mut trace, &current, n, position, y, &s_prime);

        let mut y_s: Vec<Var> = vec![y];
        y_s.extend_from_slice(&s_prime);
        let mut new_body = r.to_vec();
        for _ in 1..n {
            new_body.extend_from_slice(&y_s);
        }
        new_body.push(y);
        new_body.extend_from_slice(tail);
        cells[t].1 = new_body;
        cells.push((y, s_prime));
        remainder = &remainder[1..];
        debug_assert_eq!(
            flatten(&cells),
            current.symbols()[..flatten(&cells).len()].to_vec()
        );
    }
    let form = CellForm::new(cells, n)?;
    debug_assert_eq!(form.flatten(), current);
    Ok((form, trace))
}

/// `(pk yk)^(2n-2) pk ... (p1 y1)^(2n-2) p1`.
pub fn star_word(cf: &CellForm) -> Result<Word, CellError> {
    let power = 2 * cf.exponent_n - 2;
    let mut out = Vec::new();
    for (y, p) in cf.cells.iter().rev() {
        for _ in 0..power {
            out.extend_from_slice(p);
            out.push(*y);
        }
        out.extend_from_slice(p);
    }
    Word::new(out).map_err(|_| CellError::EmptyStar)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn word(text: &str) -> Word {
        text.parse().unwrap()
    }

    fn v(c: char) -> Var {
        Var::new(c)
    }

    fn vars(text: &str) -> Vec<Var> {
        text.chars().map(Var::new).collect()
    }

    #[test]
    fn eliminate_examples() {
        let (w, t) = eliminate_single_occurrences(&word("xyx"), 2).unwrap();
        assert_eq!(w, word("(xy)^3x"));
        assert_eq!(t.len(), 1);

        let (w, t) = eliminate_single_occurrences(&word("xx"), 2).unwrap();
        assert_eq!(w, word("xx"));
        assert!(t.is_empty());

        let (w, t) = eliminate_single_occurrences(&word("xyzx"), 1).unwrap();
        assert_eq!(w, word("xyzxyzx"));
        assert_eq!(t.len(), 1);

        assert_eq!(
            eliminate_single_occurrences(&word("xxy"), 2),
            Err(CellError::NotRepeated(v('y')))
        );
    }

    #[test]
    fn eliminate_prefers_shortest_cell() {
        // y sits in xyx (span 2) and in zxyxz (span 4)
        let (w, t) = eliminate_single_occurrences(&word("zxyxz"), 1).unwrap();
        assert_eq!(t.steps[0].position, 1);
        assert_eq!(w, word("zxyxyxz"));
    }

    #[test]
    fn decompose_examples() {
        let (cf, t) = cell_decompose(&word("xyxy"), 2).unwrap();
        assert_eq!(cf.cells(), &[(v('x'), vars("yxy")), (v('y'), vars("x"))]);
        assert_eq!(cf.flatten(), word("xyxyxyxy"));
        assert_eq!(t.len(), 1);
        assert_eq!(t.steps[0].position, 1);
        assert_eq!(t.steps[0].after, word("x(yx)^3y"));

        let (cf, t) = cell_decompose(&word("xx"), 2).unwrap();
        assert_eq!(cf.cells(), &[(v('x'), vec![])]);
        assert!(t.is_empty());

        let (cf, t) = cell_decompose(&word("xxyy"), 2).unwrap();
        assert_eq!(cf.cells(), &[(v('x'), vec![]), (v('y'), vec![])]);
        assert!(t.is_empty());

        assert_eq!(
            cell_decompose(&word("xyx"), 2),
            Err(CellError::HasSingleOccurrence(v('y')))
        );
    }

    #[test]
    fn decompose_reaches_back_past_the_previous_cell() {
        // cells x(y)x, zz, then y is only found in the first body
        let (cf, t) = cell_decompose(&word("xyxzzy"), 1).unwrap();
        assert_eq!(
            cf.cells(),
            &[(v('x'), vars("y")), (v('z'), vec![]), (v('y'), vars("xzz"))]
        );
        assert_eq!(t.replay().unwrap(), Some(cf.flatten()));
        assert_eq!(cf.flatten(), word("xyxzzyxzzy"));
    }

    #[test]
    fn star_examples() {
        let cf = CellForm::new(vec![(v('x'), vec![])], 2).unwrap();
        assert_eq!(star_word(&cf), Ok(word("xx")));
        let cf = CellForm::new(vec![(v('x'), vars("y"))], 2).unwrap();
        assert_eq!(star_word(&cf), Ok(word("yxyxy")));
        let cf = CellForm::new(vec![(v('x'), vars("yxy")), (v('y'), vars("x"))], 2).unwrap();
        assert_eq!(star_word(&cf), Ok(word("xyxyx yxyxyxyxyxy")));
        let cf = CellForm::new(vec![(v('x'), vec![]), (v('y'), vec![])], 1).unwrap();
        assert_eq!(star_word(&cf), Err(CellError::EmptyStar));
    }

    #[test]
    fn cell_form_validation() {
        assert_eq!(
            CellForm::new(vec![(v('x'), vec![]), (v('x'), vec![])], 1),
            Err(CellError::RepeatedHead(v('x')))
        );
        assert_eq!(CellForm::new(vec![], 1), Err(CellError::NoCells));
        assert_eq!(CellForm::new(vec![(v('x'), vec![])], 0), Err(CellError::ZeroExponent));
    }
}
