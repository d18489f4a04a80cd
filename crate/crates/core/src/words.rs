//! Infinite words over `{0,1,2,3}` given by a finite description.
//!
//! Positions are 1-based throughout: `letter_at(w, 1)` is the first letter.
//! All scanning operations work on the prefix `1..=horizon` and report what
//! was observed there; nothing here decides a property of the infinite word.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::{Error, Result};

/// One letter of the alphabet `{0,1,2,3}`.
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Letter(u8);

impl Letter {
    pub const ZERO: Letter = Letter(0);
    pub const ONE: Letter = Letter(1);
    pub const TWO: Letter = Letter(2);
    pub const THREE: Letter = Letter(3);

    pub fn new(value: u8) -> Result<Self> {
        if value <= 3 {
            Ok(Letter(value))
        } else {
            Err(Error::InvalidLetter(value as u32))
        }
    }

    #[inline]
    pub fn value(self) -> u8 {
        self.0
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn is_two_three(self) -> bool {
        self.0 >= 2
    }
}

impl TryFrom<u32> for Letter {
    type Error = Error;
    fn try_from(v: u32) -> Result<Self> {
        if v <= 3 {
            Ok(Letter(v as u8))
        } else {
            Err(Error::InvalidLetter(v))
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A finite word. Displays and parses as a digit string such as `"1010"`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct FiniteWord(Vec<Letter>);

impl FiniteWord {
    pub fn new(letters: Vec<Letter>) -> Self {
        FiniteWord(letters)
    }

    pub fn empty() -> Self {
        FiniteWord(Vec::new())
    }

    pub fn from_values(values: &[u8]) -> Result<Self> {
        values.iter().map(|&v| Letter::new(v)).collect::<Result<Vec<_>>>().map(FiniteWord)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Number of non-zero letters.
    pub fn weight(&self) -> usize {
        weight(&self.0)
    }

    pub fn reversed(&self) -> FiniteWord {
        FiniteWord(self.0.iter().rev().copied().collect())
    }

    pub fn concat(&self, other: &FiniteWord) -> FiniteWord {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        FiniteWord(v)
    }

    /// Swap 0 and 1; other letters are kept.
    pub fn complement_binary(&self) -> FiniteWord {
        FiniteWord(
            self.0
                .iter()
                .map(|l| match l.0 {
                    0 => Letter::ONE,
                    1 => Letter::ZERO,
                    _ => *l,
                })
                .collect(),
        )
    }

    /// Length of the longest run of zeros.
    pub fn longest_zero_run(&self) -> usize {
        let mut best = 0;
        let mut cur = 0;
        for l in &self.0 {
            if l.is_zero() {
                cur += 1;
                best = best.max(cur);
            } else {
                cur = 0;
            }
        }
        best
    }

    /// Does `needle` occur as a factor?
    pub fn contains_factor(&self, needle: &FiniteWord) -> bool {
        needle.is_empty() || self.0.windows(needle.len()).any(|w| w == needle.letters())
    }
}

impl From<Vec<Letter>> for FiniteWord {
    fn from(v: Vec<Letter>) -> Self {
        FiniteWord(v)
    }
}

impl fmt::Display for FiniteWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.0 {
            write!(f, "{}", l.0)?;
        }
        Ok(())
    }
}

impl FromStr for FiniteWord {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .filter(|c| !c.is_whitespace())
            .map(|c| match c.to_digit(10) {
                Some(d) => Letter::try_from(d),
                None => Err(Error::Parse(alloc::format!("'{c}' is not a letter"))),
            })
            .collect::<Result<Vec<_>>>()
            .map(FiniteWord)
    }
}

/// Number of non-zero letters of a slice.
pub fn weight(letters: &[Letter]) -> usize {
    letters.iter().filter(|l| !l.is_zero()).count()
}

/// Slope of a rotation word, in `[0, 1)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Slope {
    /// `num / den`; gives a periodic (Christoffel-type) word.
    Rational { num: u64, den: u64 },
    /// `[0; a_1, a_2, ...]` with the partial quotients `prefix` followed by
    /// `period` repeated forever. A non-empty period makes the slope a
    /// quadratic irrational, so the word is Sturmian.
    ContinuedFraction { prefix: Vec<u64>, period: Vec<u64> },
}

/// Rotation word `b_j = floor((j+1)·slope + intercept) − floor(j·slope + intercept)`,
/// with the bit mapped through `letters`.
///
/// Irrational slopes are evaluated with continued-fraction convergents whose
/// next denominator exceeds `j · intercept_den`; at that precision the floor
/// is exact, and the one ambiguous case (the rational approximation lands on
/// an integer) is settled by the known side of the convergent.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Rotation {
    pub slope: Slope,
    /// `(num, den)` with `0 <= num < den`.
    pub intercept: (u64, u64),
    pub letters: [Letter; 2],
}

impl Rotation {
    /// The golden rotation word: slope `[0; 1, 1, 1, ...] = (√5 − 1)/2`, intercept 0.
    pub fn golden() -> Self {
        Rotation {
            slope: Slope::ContinuedFraction { prefix: Vec::new(), period: vec![1] },
            intercept: (0, 1),
            letters: [Letter::ZERO, Letter::ONE],
        }
    }

    fn validate(&self) -> Result<()> {
        let (r, s) = self.intercept;
        if s == 0 || r >= s {
            return Err(Error::InvalidRotation("intercept must lie in [0,1)"));
        }
        match &self.slope {
            Slope::Rational { num, den } => {
                if *den == 0 || num >= den {
                    return Err(Error::InvalidRotation("rational slope must lie in [0,1)"));
                }
            }
            Slope::ContinuedFraction { prefix, period } => {
                if period.is_empty() {
                    return Err(Error::InvalidRotation("continued fraction needs a repeating tail"));
                }
                if prefix.iter().chain(period).any(|&a| a == 0) {
                    return Err(Error::InvalidRotation("partial quotients must be positive"));
                }
            }
        }
        Ok(())
    }

    fn partial_quotient(prefix: &[u64], period: &[u64], n: usize) -> u64 {
        // n >= 1
        if n <= prefix.len() {
            prefix[n - 1]
        } else {
            period[(n - 1 - prefix.len()) % period.len()]
        }
    }

    /// Floors `floor(j·slope + intercept)` for `j` in `start..start+count`.
    fn floors(&self, start: u64, count: usize) -> Vec<u128> {
        let (r, s) = (self.intercept.0 as u128, self.intercept.1 as u128);
        let last = start + count as u64;
        match &self.slope {
            Slope::Rational { num, den } => {
                let (p, q) = (*num as u128, *den as u128);
                (start..last)
                    .map(|j| (j as u128 * p * s + r * q) / (q * s))
                    .collect()
            }
            Slope::ContinuedFraction { prefix, period } => {
                // convergents p_n/q_n; need q_{n+1} >= last * s
                let need = last as u128 * s;
                let (mut p_prev, mut q_prev) = (1u128, 0u128);
                let (mut p, mut q) = (0u128, 1u128);
                let mut n = 0usize;
                loop {
                    let a = Self::partial_quotient(prefix, period, n + 1) as u128;
                    let (p_next, q_next) = (a * p + p_prev, a * q + q_prev);
                    if q_next >= need {
                        break;
                    }
                    p_prev = p;
                    q_prev = q;
                    p = p_next;
                    q = q_next;
                    n += 1;
                }
                // even-indexed convergents lie below the slope
                let below = n % 2 == 0;
                (start..last)
                    .map(|j| {
                        let x = j as u128 * p * s + r * q;
                        let d = q * s;
                        let f = x / d;
                        if x % d == 0 && !below {
                            f - 1
                        } else {
                            f
                        }
                    })
                    .collect()
            }
        }
    }

    /// Letters `start..start+len` (1-based start).
    pub fn letters_range(&self, start: usize, len: usize) -> Vec<Letter> {
        if len == 0 {
            return Vec::new();
        }
        let fl = self.floors(start as u64, len + 1);
        fl.windows(2)
            .map(|w| self.letters[(w[1] - w[0]) as usize & 1])
            .collect()
    }
}

/// A prolongable substitution together with its seed letter.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Substitution {
    pub rules: BTreeMap<Letter, FiniteWord>,
    pub seed: Letter,
}

impl Substitution {
    /// `σ(1) = 1010`, `σ(0) = 0`, seeded with 1.
    pub fn psi() -> Self {
        let mut rules = BTreeMap::new();
        rules.insert(Letter::ONE, "1010".parse().unwrap());
        rules.insert(Letter::ZERO, "0".parse().unwrap());
        Substitution { rules, seed: Letter::ONE }
    }

    fn validate(&self) -> Result<()> {
        let seed_rule = self
            .rules
            .get(&self.seed)
            .ok_or(Error::MissingRule { letter: self.seed.value() })?;
        if seed_rule.letters().first() != Some(&self.seed) || seed_rule.len() < 2 {
            return Err(Error::NonProlongable { seed: self.seed.value() });
        }
        // every reachable letter needs a rule
        let mut seen = BTreeSet::new();
        let mut stack = vec![self.seed];
        while let Some(l) = stack.pop() {
            if !seen.insert(l) {
                continue;
            }
            let rule = self.rules.get(&l).ok_or(Error::MissingRule { letter: l.value() })?;
            stack.extend(rule.letters().iter().copied());
        }
        Ok(())
    }

    /// Apply the substitution once.
    pub fn apply(&self, w: &[Letter]) -> Result<Vec<Letter>> {
        let mut out = Vec::new();
        for l in w {
            let rule = self.rules.get(l).ok_or(Error::MissingRule { letter: l.value() })?;
            out.extend_from_slice(rule.letters());
        }
        Ok(out)
    }

    /// `σ^n(seed)`.
    pub fn iterate(&self, n: usize) -> Result<FiniteWord> {
        self.validate()?;
        let mut w = vec![self.seed];
        for _ in 0..n {
            w = self.apply(&w)?;
        }
        Ok(FiniteWord(w))
    }

    /// First `n` letters of the fixed point.
    fn prefix(&self, n: usize) -> Result<Vec<Letter>> {
        self.validate()?;
        let mut w = vec![self.seed];
        while w.len() < n {
            let mut next = Vec::with_capacity(n.min(w.len() * 4));
            for l in &w {
                next.extend_from_slice(self.rules[l].letters());
                if next.len() >= n {
                    break;
                }
            }
            if next.len() <= w.len() {
                return Err(Error::NonProlongable { seed: self.seed.value() });
            }
            w = next;
        }
        w.truncate(n);
        Ok(w)
    }

    /// The gap bound available for binary substitutions `1 -> δ, 0 -> 0` with
    /// `δ` starting with 1, ending with 0 and of weight at least 2: occurrences of
    /// `beta` are separated by factors of weight at most `|δ|_1^(z+1)`, where `z`
    /// is the longest run of zeros in `beta`.
    pub fn declared_gap_bound(&self, beta: &FiniteWord) -> Option<usize> {
        if self.seed != Letter::ONE || self.rules.len() != 2 {
            return None;
        }
        let zero = self.rules.get(&Letter::ZERO)?;
        let delta = self.rules.get(&Letter::ONE)?;
        let binary = delta.letters().iter().all(|l| l.value() <= 1);
        if zero.letters() != [Letter::ZERO]
            || !binary
            || delta.letters().first() != Some(&Letter::ONE)
            || delta.letters().last() != Some(&Letter::ZERO)
            || delta.weight() < 2
        {
            return None;
        }
        let exp = beta.longest_zero_run() as u32 + 1;
        delta.weight().checked_pow(exp)
    }
}

/// A finitely described infinite word.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum WordSpec {
    Periodic(FiniteWord),
    Sturmian(Rotation),
    Substitution(Substitution),
    /// Only the given prefix is known; access beyond it is an error.
    Explicit(FiniteWord),
}

impl WordSpec {
    pub fn periodic(s: &str) -> Result<Self> {
        let w: FiniteWord = s.parse()?;
        if w.is_empty() {
            return Err(Error::EmptyPeriod);
        }
        Ok(WordSpec::Periodic(w))
    }

    pub fn explicit(s: &str) -> Result<Self> {
        Ok(WordSpec::Explicit(s.parse()?))
    }

    pub fn golden() -> Self {
        WordSpec::Sturmian(Rotation::golden())
    }

    pub fn psi() -> Self {
        WordSpec::Substitution(Substitution::psi())
    }

    /// Check the structural invariants of the description.
    pub fn validate(&self) -> Result<()> {
        match self {
            WordSpec::Periodic(p) if p.is_empty() => Err(Error::EmptyPeriod),
            WordSpec::Periodic(_) | WordSpec::Explicit(_) => Ok(()),
            WordSpec::Sturmian(r) => r.validate(),
            WordSpec::Substitution(s) => s.validate(),
        }
    }

    /// Letters `j..j+len` (1-based `j`).
    pub fn letters(&self, j: usize, len: usize) -> Result<Vec<Letter>> {
        if j == 0 {
            return Err(Error::ZeroIndex);
        }
        if len == 0 {
            return Ok(Vec::new());
        }
        match self {
            WordSpec::Periodic(p) => {
                if p.is_empty() {
                    return Err(Error::EmptyPeriod);
                }
                let p = p.letters();
                Ok((j - 1..j - 1 + len).map(|i| p[i % p.len()]).collect())
            }
            WordSpec::Explicit(w) => {
                let end = j - 1 + len;
                if end > w.len() {
                    return Err(Error::IndexOutOfPrefix { index: end, len: w.len() });
                }
                Ok(w.letters()[j - 1..end].to_vec())
            }
            WordSpec::Sturmian(r) => {
                r.validate()?;
                Ok(r.letters_range(j, len))
            }
            WordSpec::Substitution(s) => {
                let pre = s.prefix(j - 1 + len)?;
                Ok(pre[j - 1..].to_vec())
            }
        }
    }

    /// First `n` letters.
    pub fn prefix(&self, n: usize) -> Result<FiniteWord> {
        if n == 0 {
            return Ok(FiniteWord::empty());
        }
        self.letters(1, n).map(FiniteWord)
    }

    /// Proven bound on gap weights for `beta`, when the description yields one.
    pub fn declared_gap_bound(&self, beta: &FiniteWord) -> Option<usize> {
        match self {
            // any gap is shorter than the period, so it weighs at most one period
            WordSpec::Periodic(p) => Some(p.weight()),
            WordSpec::Substitution(s) => s.declared_gap_bound(beta),
            _ => None,
        }
    }
}

/// The `j`-th letter (1-based).
pub fn letter_at(w: &WordSpec, j: usize) -> Result<Letter> {
    Ok(w.letters(j, 1)?[0])
}

/// Letters `j..j+len`.
pub fn factor(w: &WordSpec, j: usize, len: usize) -> Result<FiniteWord> {
    w.letters(j, len).map(FiniteWord)
}

/// Distinct length-`n` factors starting at positions `1..=horizon-n+1`.
pub fn factor_complexity(w: &WordSpec, n: usize, horizon: usize) -> Result<usize> {
    if n > horizon {
        return Ok(0);
    }
    let pre = w.prefix(horizon)?;
    if n == 0 {
        return Ok(1);
    }
    let set: BTreeSet<&[Letter]> = pre.letters().windows(n).collect();
    Ok(set.len())
}

/// Occurrences of a factor and the factors strictly between consecutive ones.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GapReport {
    pub factor: FiniteWord,
    /// 1-based start positions, strictly increasing.
    pub occurrences: Vec<usize>,
    /// `gap_factors[i]` lies between occurrence `i` and `i+1`; empty when they overlap.
    pub gap_factors: Vec<FiniteWord>,
    pub max_gap_weight: usize,
    pub horizon: usize,
}

impl GapReport {
    pub fn found(&self) -> bool {
        !self.occurrences.is_empty()
    }
}

fn occurrences_in(pre: &[Letter], beta: &[Letter]) -> Vec<usize> {
    if beta.len() > pre.len() {
        return Vec::new();
    }
    pre.windows(beta.len())
        .enumerate()
        .filter(|(_, w)| *w == beta)
        .map(|(i, _)| i + 1)
        .collect()
}

fn gaps_from(pre: &[Letter], occ: &[usize], blen: usize) -> Vec<FiniteWord> {
    occ.windows(2)
        .map(|p| {
            let from = p[0] - 1 + blen;
            let to = p[1] - 1;
            if from < to {
                FiniteWord(pre[from..to].to_vec())
            } else {
                FiniteWord::empty()
            }
        })
        .collect()
}

/// All occurrences of `beta` inside the first `horizon` letters and the gap factors.
pub fn gap_report(w: &WordSpec, beta: &FiniteWord, horizon: usize) -> Result<GapReport> {
    if beta.is_empty() {
        return Err(Error::EmptyFactor);
    }
    let pre = w.prefix(horizon)?;
    let occurrences = occurrences_in(pre.letters(), beta.letters());
    let gap_factors = gaps_from(pre.letters(), &occurrences, beta.len());
    let max_gap_weight = gap_factors.iter().map(FiniteWord::weight).max().unwrap_or(0);
    Ok(GapReport { factor: beta.clone(), occurrences, gap_factors, max_gap_weight, horizon })
}

/// Outcome of the finite-horizon probe for one factor.
#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum GammaVerdict {
    /// Observed gap weights stay under the declared bound, or show no growth.
    ConsistentWithGamma,
    /// Maximum gap weight grew strictly over three successive horizon doublings.
    UnboundedTrend,
    /// A gap weight exceeds the declared bound.
    BoundExceeded,
    /// Fewer than two occurrences inside the horizon.
    TooFewOccurrences,
}

impl GammaVerdict {
    pub fn as_str(self) -> &'static str {
        match self {
            GammaVerdict::ConsistentWithGamma => "consistent-with-gamma",
            GammaVerdict::UnboundedTrend => "unbounded-trend",
            GammaVerdict::BoundExceeded => "bound-exceeded",
            GammaVerdict::TooFewOccurrences => "too-few-occurrences",
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FactorProbe {
    pub factor: FiniteWord,
    pub occurrences: usize,
    pub max_gap_weight: usize,
    pub declared_bound: Option<usize>,
    /// Maximum gap weight at horizons H/8, H/4, H/2 and H.
    pub trend: [usize; 4],
    pub verdict: GammaVerdict,
}

/// Probe every factor of length `1..=max_factor_len` seen in the first
/// `horizon` letters. This is evidence at a finite horizon, never a proof.
pub fn gamma_membership_probe(
    w: &WordSpec,
    max_factor_len: usize,
    horizon: usize,
) -> Result<Vec<FactorProbe>> {
    let pre = w.prefix(horizon)?;
    if pre.weight() == 0 {
        return Err(Error::AllZeroWindow);
    }
    let letters = pre.letters();
    let mut out = Vec::new();
    for len in 1..=max_factor_len.min(horizon) {
        let factors: BTreeSet<&[Letter]> = letters.windows(len).collect();
        for f in factors {
            let beta = FiniteWord(f.to_vec());
            let max_at = |h: usize| {
                let window = &letters[..h.min(letters.len())];
                let occ = occurrences_in(window, f);
                gaps_from(window, &occ, len).iter().map(FiniteWord::weight).max().unwrap_or(0)
            };
            let occ = occurrences_in(letters, f);
            let trend = [max_at(horizon / 8), max_at(horizon / 4), max_at(horizon / 2), max_at(horizon)];
            let max_gap_weight = trend[3];
            let declared_bound = w.declared_gap_bound(&beta);
            let verdict = if occ.len() < 2 {
                GammaVerdict::TooFewOccurrences
            } else if let Some(b) = declared_bound {
                if max_gap_weight <= b {
                    GammaVerdict::ConsistentWithGamma
                } else {
                    GammaVerdict::BoundExceeded
                }
            } else if trend[0] < trend[1] && trend[1] < trend[2] && trend[2] < trend[3] {
                GammaVerdict::UnboundedTrend
            } else {
                GammaVerdict::ConsistentWithGamma
            };
            out.push(FactorProbe {
                factor: beta,
                occurrences: occ.len(),
                max_gap_weight,
                declared_bound,
                trend,
                verdict,
            });
        }
    }
    Ok(out)
}

/// Smallest `l` such that every length-`l` window of the first `horizon`
/// letters contains `beta`; `None` when no `l <= horizon` works.
pub fn recurrence_window_estimate(
    w: &WordSpec,
    beta: &FiniteWord,
    horizon: usize,
) -> Result<Option<usize>> {
    if beta.is_empty() {
        return Err(Error::EmptyFactor);
    }
    let pre = w.prefix(horizon)?;
    let occ = occurrences_in(pre.letters(), beta.letters());
    let (Some(&first), Some(&last)) = (occ.first(), occ.last()) else {
        return Ok(None);
    };
    let b = beta.len();
    // window starting at 1 must reach the end of the first occurrence
    let mut need = first - 1 + b;
    for p in occ.windows(2) {
        // window starting right after p[0] must reach the end of p[1]
        need = need.max(p[1] - p[0] - 1 + b);
    }
    // windows starting after the last occurrence must not fit
    need = need.max(horizon - last + 1);
    Ok(if need <= horizon { Some(need) } else { None })
}
