//! Removing `0` and `1` letters from grid windows with vertex-minor
//! operations.
//!
//! A window is a graph whose vertices carry coordinates forming a full
//! rectangle of rows and consecutive columns. Its letters are read back from
//! the edges between consecutive columns. Row numbers below are local to the
//! window and start at 1 at the top.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec::Vec;

use super::{ReductionTrace, StepKind};
use crate::error::{Error, Result};
use crate::graph::{build_h, link_adjacent, Graph};
use crate::words::{FiniteWord, Letter, WordSpec};

#[derive(Copy, Clone, PartialEq, Eq, Debug, Hash)]
pub enum ZeroRule {
    /// `00`
    Double,
    /// `01` or `10`
    BesideOne,
    /// `02`, `20`, `03` or `30`
    BesideTwoThree,
}

impl ZeroRule {
    pub fn name(self) -> &'static str {
        match self {
            ZeroRule::Double => "00",
            ZeroRule::BesideOne => "01/10",
            ZeroRule::BesideTwoThree => "02/20/03/30",
        }
    }

    fn for_pair(a: Letter, b: Letter) -> Option<Self> {
        match (a.value(), b.value()) {
            (0, 0) => Some(ZeroRule::Double),
            (0, 1) | (1, 0) => Some(ZeroRule::BesideOne),
            (0, _) | (_, 0) => Some(ZeroRule::BesideTwoThree),
            _ => None,
        }
    }
}

#[derive(Copy, Clone, PartialEq, Eq, Debug, Hash)]
pub enum OneRule {
    /// `211`, `112`, `311` or `113`
    Single,
    /// `212` or `313`
    Same,
    /// `213` or `312`
    Mixed,
}

impl OneRule {
    pub fn name(self) -> &'static str {
        match self {
            OneRule::Single => "211/112/311/113",
            OneRule::Same => "212/313",
            OneRule::Mixed => "213/312",
        }
    }

    fn for_factor(f: [Letter; 3]) -> Option<Self> {
        match f.map(Letter::value) {
            [a, 1, 1] | [1, 1, a] if a >= 2 => Some(OneRule::Single),
            [a, 1, b] if a >= 2 && a == b => Some(OneRule::Same),
            [a, 1, b] if a >= 2 && b >= 2 => Some(OneRule::Mixed),
            _ => None,
        }
    }
}

struct Window {
    rows: usize,
    cols: usize,
    row0: usize,
    col0: usize,
    letters: Vec<Letter>,
}

impl Window {
    fn read(g: &Graph) -> Result<Window> {
        let mut coords = Vec::with_capacity(g.n());
        for p in 0..g.n() {
            coords.push(g.coord(p).ok_or(Error::MissingCoords(g.vertex(p).id))?);
        }
        let row0 = coords.iter().map(|c| c.0).min().unwrap_or(0);
        let col0 = coords.iter().map(|c| c.1).min().unwrap_or(0);
        let rows = coords.iter().map(|c| c.0 + 1 - row0).max().unwrap_or(0);
        let cols = coords.iter().map(|c| c.1 + 1 - col0).max().unwrap_or(0);
        if rows < 2 {
            return Err(Error::TooFewRows { rows, needed: 2 });
        }
        if rows * cols != g.n() {
            return Err(Error::NotAGridWindow);
        }
        let mut w = Window { rows, cols, row0, col0, letters: Vec::with_capacity(cols.saturating_sub(1)) };
        let mut cell = alloc::vec![usize::MAX; g.n()];
        for (p, &(r, c)) in coords.iter().enumerate() {
            let slot = &mut cell[(c - col0) * rows + (r - row0)];
            if *slot != usize::MAX {
                return Err(Error::DuplicateCoord { row: r, col: c });
            }
            *slot = p;
        }
        let link = |c1: usize, r1: usize, c2: usize, r2: usize| g.has_edge(cell[c1 * rows + r1], cell[c2 * rows + r2]);
        for c1 in 0..cols {
            for c2 in c1..cols {
                if c2 == c1 + 1 {
                    continue;
                }
                if (0..rows).any(|r1| (0..rows).any(|r2| link(c1, r1, c2, r2))) {
                    return Err(Error::NotAGridWindow);
                }
            }
        }
        for c in 0..cols.saturating_sub(1) {
            let letter = [Letter::ZERO, Letter::ONE, Letter::TWO, Letter::THREE]
                .into_iter()
                .find(|&l| (0..rows).all(|r1| (0..rows).all(|r2| link(c, r1, c + 1, r2) == link_adjacent(l, r1, r2))))
                .ok_or(Error::NotAGridWindow)?;
            w.letters.push(letter);
        }
        Ok(w)
    }

    fn id(&self, g: &Graph, row: usize, col: usize) -> usize {
        let p = g.position_of_coord(self.row0 + row - 1, self.col0 + col).expect("window cell");
        g.vertex(p).id
    }

    fn column_ids(&self, g: &Graph, col: usize) -> Vec<usize> {
        (1..=self.rows).map(|r| self.id(g, r, col)).collect()
    }

    fn row_ids(&self, g: &Graph, row: usize, cols: core::ops::Range<usize>) -> Vec<usize> {
        cols.map(|c| self.id(g, row, c)).collect()
    }

    fn local_col(&self, col: usize) -> Option<usize> {
        col.checked_sub(self.col0).filter(|&c| c < self.cols)
    }
}

/// Letters between consecutive columns of a window.
pub fn infer_letters(g: &Graph) -> Result<FiniteWord> {
    Ok(FiniteWord::new(Window::read(g)?.letters))
}

/// Remove a `0` next to the column `col` (a global column number): the
/// middle column of the two-letter factor is complemented locally and
/// deleted, together with the rows the rule asks for.
pub fn remove_zero(g: &Graph, col: usize, rule: ZeroRule) -> Result<ReductionTrace> {
    let mut trace = ReductionTrace::new(g.clone());
    zero_step(&mut trace, col, rule)?;
    Ok(trace)
}

fn zero_step(trace: &mut ReductionTrace, col: usize, rule: ZeroRule) -> Result<()> {
    let g = trace.final_graph.clone();
    let w = Window::read(&g)?;
    let mismatch = Error::FactorMismatch { column: col, rule: rule.name() };
    let c = w.local_col(col).filter(|&c| c >= 1 && c + 1 < w.cols).ok_or(mismatch.clone())?;
    let (a, b) = (w.letters[c - 1], w.letters[c]);
    if ZeroRule::for_pair(a, b) != Some(rule) {
        return Err(mismatch);
    }
    let m = w.rows;
    let (complemented, dropped_rows): (usize, Vec<usize>) = match rule {
        ZeroRule::Double => (m, Vec::new()),
        ZeroRule::BesideOne if m % 2 == 1 => (m - 1, alloc::vec![m]),
        ZeroRule::BesideOne => (m, Vec::new()),
        ZeroRule::BesideTwoThree => {
            // 02 and 30 lose the odd rows, 20 and 03 the rows of the parity of m
            let odd = matches!((a.value(), b.value()), (0, 2) | (3, 0));
            (m, (1..=m).filter(|r| if odd { r % 2 == 1 } else { r % 2 == m % 2 }).collect())
        }
    };
    if m - dropped_rows.len() < 2 {
        return Err(Error::TooFewRows { rows: m, needed: 4 });
    }
    let mut deleted: BTreeSet<usize> = w.column_ids(&g, c).into_iter().collect();
    for &r in &dropped_rows {
        deleted.extend(w.row_ids(&g, r, 0..w.cols));
    }
    let note = format!("remove 0 from {}{} at column {col}", a.value(), b.value());
    for r in 1..=complemented {
        trace.push(StepKind::LocalComplement(w.id(&g, r, c)), note.clone())?;
    }
    trace.push(StepKind::DeleteVertices(deleted), note)
}

/// Remove the `1`s of the three-letter factor whose first column is `col`
/// (a global column number): one pivot across the middle letter, row
/// deletions, then zero removals.
pub fn remove_one(g: &Graph, col: usize, rule: OneRule) -> Result<ReductionTrace> {
    let mut trace = ReductionTrace::new(g.clone());
    one_step(&mut trace, col, rule)?;
    Ok(trace)
}

fn one_step(trace: &mut ReductionTrace, col: usize, rule: OneRule) -> Result<()> {
    let g = trace.final_graph.clone();
    let w = Window::read(&g)?;
    let mismatch = Error::FactorMismatch { column: col, rule: rule.name() };
    let c = w.local_col(col).filter(|&c| c + 3 < w.cols).ok_or(mismatch.clone())?;
    let f = [w.letters[c], w.letters[c + 1], w.letters[c + 2]];
    if OneRule::for_factor(f) != Some(rule) {
        return Err(mismatch);
    }
    let m = w.rows;
    if m < 5 {
        return Err(Error::TooFewRows { rows: m, needed: 5 });
    }
    let (c1, c2) = (c + 1, c + 2);
    // the pivot edge runs between the first and last rows, oriented by the 2/3 letter
    let two = f.iter().find(|l| l.is_two_three()).is_some_and(|l| l.value() == 2);
    let (xr, yr) = if two { (1, m) } else { (m, 1) };
    // rows lost by the columns up to y's column and by the columns after it
    let (left_rows, right_rows) = match (rule, two) {
        (OneRule::Mixed, true) => (alloc::vec![1, m - 1, m], alloc::vec![1, 2, m]),
        (OneRule::Mixed, false) => (alloc::vec![1, 2, m], alloc::vec![1, m - 1, m]),
        _ => (alloc::vec![1, m], alloc::vec![1, m]),
    };
    let note = format!("remove 1 from {}{}{} at column {col}", f[0].value(), f[1].value(), f[2].value());
    trace.push(StepKind::Pivot(w.id(&g, xr, c1), w.id(&g, yr, c2)), note.clone())?;
    let mut deleted = BTreeSet::new();
    for r in left_rows {
        deleted.extend(w.row_ids(&g, r, 0..c2 + 1));
    }
    for r in right_rows {
        deleted.extend(w.row_ids(&g, r, c2 + 1..w.cols));
    }
    trace.push(StepKind::DeleteVertices(deleted), note)?;
    let first = w.col0 + c;
    match f.map(Letter::value) {
        [_, 1, 1] => {
            zero_step(trace, first + 2, ZeroRule::Double)?;
            zero_step(trace, first + 1, ZeroRule::BesideTwoThree)
        }
        [1, 1, _] => {
            zero_step(trace, first + 1, ZeroRule::Double)?;
            zero_step(trace, first + 1, ZeroRule::BesideTwoThree)
        }
        _ => zero_step(trace, first + 1, ZeroRule::BesideTwoThree),
    }
}

/// Result of [`reduce_to_23`].
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Reduction {
    pub trace: ReductionTrace,
    /// Letters of the final window, all from `{2,3}`.
    pub word: FiniteWord,
    /// Row count before each operation, then the final row count.
    pub rows: Vec<usize>,
}

/// Starting from the window of `(q+4)·2^(p-q)` rows over the factor
/// `α_j … α_{j+p-1}` (with `q` letters from `{2,3}`), remove every `0` and
/// `1`, always acting on the leftmost one. A `1` alone at the end of the
/// window is removed by deleting the end column.
pub fn reduce_to_23(w: &WordSpec, j: usize, p: usize) -> Result<Reduction> {
    let letters = w.letters(j, p)?;
    let q = letters.iter().filter(|l| l.is_two_three()).count();
    if q == 0 {
        return Err(Error::NoTwoThreeLetter);
    }
    let rows = (q + 4) << (p - q);
    let mut trace = ReductionTrace::new(build_h(w, 1, j, rows, p + 1)?);
    let mut counts = Vec::new();
    loop {
        let g = trace.final_graph.clone();
        let win = Window::read(&g)?;
        counts.push(win.rows);
        let ls = &win.letters;
        let at = |c: usize| win.col0 + c;
        if let Some(t) = ls.iter().position(|l| l.is_zero()) {
            let c = if t > 0 { t } else { 1 };
            let rule = ZeroRule::for_pair(ls[c - 1], ls[c]).expect("a zero in the pair");
            zero_step(&mut trace, at(c), rule)?;
            continue;
        }
        let Some(s) = ls.iter().position(|l| l.value() == 1) else { break };
        let run = ls[s..].iter().take_while(|l| l.value() == 1).count();
        let e = s + run;
        if run >= 2 && s > 0 {
            one_step(&mut trace, at(s - 1), OneRule::Single)?;
        } else if run >= 2 {
            one_step(&mut trace, at(e - 2), OneRule::Single)?;
        } else if s > 0 && e < ls.len() {
            let rule = OneRule::for_factor([ls[s - 1], ls[s], ls[e]]).expect("1 between 2/3 letters");
            one_step(&mut trace, at(s - 1), rule)?;
        } else {
            let end = if s == 0 { 0 } else { win.cols - 1 };
            let note = format!("remove 1 at the end of the window by deleting column {}", at(end));
            trace.push(StepKind::DeleteVertices(win.column_ids(&g, end).into_iter().collect()), note)?;
        }
    }
    let word = infer_letters(&trace.final_graph)?;
    Ok(Reduction { trace, word, rows: counts })
}
