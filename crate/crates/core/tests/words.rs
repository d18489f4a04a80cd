use cwlab_core::words::*;
use proptest::prelude::*;

fn fw(s: &str) -> FiniteWord {
    s.parse().unwrap()
}

fn cf_rotation(prefix: Vec<u64>, period: Vec<u64>, intercept: (u64, u64)) -> WordSpec {
    WordSpec::Sturmian(Rotation {
        slope: Slope::ContinuedFraction { prefix, period },
        intercept,
        letters: [Letter::ZERO, Letter::ONE],
    })
}

fn quotient(prefix: &[u64], period: &[u64], n: usize) -> u64 {
    if n <= prefix.len() {
        prefix[n - 1]
    } else {
        period[(n - 1 - prefix.len()) % period.len()]
    }
}

/// Characteristic word of slope `[0; a_1, a_2, ...]` built from standard words:
/// `s_{-1} = 1`, `s_0 = 0`, `s_1 = s_0^(a_1 - 1) s_{-1}`, `s_n = s_{n-1}^(a_n) s_{n-2}`.
fn standard_word(prefix: &[u64], period: &[u64], len: usize) -> String {
    let mut older = String::from("0");
    let mut prev = "0".repeat(quotient(prefix, period, 1) as usize - 1) + "1";
    let mut n = 2;
    while prev.len() < len + 1 {
        let next = prev.repeat(quotient(prefix, period, n) as usize) + &older;
        older = prev;
        prev = next;
        n += 1;
    }
    prev[..len].to_string()
}

fn cf_value(prefix: &[u64], period: &[u64]) -> f64 {
    let mut x = 0.0f64;
    for n in (1..=60).rev() {
        x = 1.0 / (quotient(prefix, period, n) as f64 + x);
    }
    x
}

#[test]
fn golden_word_matches_standard_words() {
    let w = WordSpec::golden();
    let exact = w.prefix(3000).unwrap().to_string();
    assert_eq!(exact, standard_word(&[], &[1], 3000));
    assert!(exact.starts_with("10110101"));
}

#[test]
fn characteristic_words_match_standard_words() {
    let cases: [(&[u64], &[u64]); 4] = [(&[2], &[1]), (&[], &[2]), (&[1, 3], &[1, 2]), (&[4], &[3, 1])];
    for (prefix, period) in cases {
        let w = cf_rotation(prefix.to_vec(), period.to_vec(), (0, 1));
        assert_eq!(
            w.prefix(2000).unwrap().to_string(),
            standard_word(prefix, period, 2000),
            "slope [0;{prefix:?},({period:?})*]"
        );
    }
}

#[test]
fn rotation_with_intercept_matches_floating_point_away_from_ties() {
    let prefix = vec![1, 2];
    let period = vec![3, 1];
    let theta = cf_value(&prefix, &period);
    for (r, s) in [(1u64, 3u64), (2, 7), (5, 11), (1, 2)] {
        let w = cf_rotation(prefix.clone(), period.clone(), (r, s));
        let letters = w.prefix(1500).unwrap();
        let rho = r as f64 / s as f64;
        for j in 1..=1500usize {
            let a = j as f64 * theta + rho;
            let b = (j + 1) as f64 * theta + rho;
            if (a - a.round()).abs() < 1e-7 || (b - b.round()).abs() < 1e-7 {
                continue;
            }
            let bit = (b.floor() - a.floor()) as u8;
            assert_eq!(letters.letters()[j - 1].value(), bit, "j={j} rho={r}/{s}");
        }
    }
}

#[test]
fn rational_rotation_is_periodic() {
    let w = WordSpec::Sturmian(Rotation {
        slope: Slope::Rational { num: 2, den: 5 },
        intercept: (0, 1),
        letters: [Letter::ZERO, Letter::TWO],
    });
    let p = w.prefix(40).unwrap();
    for j in 0..35 {
        assert_eq!(p.letters()[j], p.letters()[j + 5]);
    }
    assert_eq!(w.prefix(5).unwrap().weight(), 2);
    assert!(p.letters().iter().all(|l| l.value() == 0 || l.value() == 2));
}

#[test]
fn sturmian_complexity_is_n_plus_one() {
    for (prefix, period) in [(vec![], vec![1]), (vec![2], vec![1, 3]), (vec![], vec![2, 1])] {
        let w = cf_rotation(prefix, period, (1, 3));
        for n in 1..=12 {
            assert_eq!(factor_complexity(&w, n, 5000).unwrap(), n + 1, "n={n}");
        }
    }
}

#[test]
fn psi_weight_doubles_and_length_grows() {
    let s = Substitution::psi();
    for n in 0..10 {
        let w = s.iterate(n).unwrap();
        assert_eq!(w.weight(), 1 << n);
        assert_eq!(w.len(), 3 * (1 << n) - 2);
    }
}

#[test]
fn psi_declared_bound_depends_on_longest_zero_run() {
    let s = Substitution::psi();
    assert_eq!(s.declared_gap_bound(&fw("1")), Some(2));
    assert_eq!(s.declared_gap_bound(&fw("1001")), Some(8));
    assert_eq!(s.declared_gap_bound(&fw("0001")), Some(16));
}

#[test]
fn psi_gaps_respect_declared_bound() {
    let psi = WordSpec::psi();
    let pre = psi.prefix(3000).unwrap();
    for len in 1..=6 {
        let mut seen = std::collections::BTreeSet::new();
        for f in pre.letters().windows(len) {
            if !seen.insert(f.to_vec()) {
                continue;
            }
            let beta = FiniteWord::new(f.to_vec());
            let r = gap_report(&psi, &beta, 3000).unwrap();
            let bound = psi.declared_gap_bound(&beta).unwrap();
            assert!(r.max_gap_weight <= bound, "{beta}: {} > {bound}", r.max_gap_weight);
        }
    }
}

fn brute_recurrence(pre: &[Letter], beta: &[Letter]) -> Option<usize> {
    (1..=pre.len()).find(|&l| pre.windows(l).all(|win| win.windows(beta.len()).any(|x| x == beta)))
}

fn arb_word(max_len: usize) -> impl Strategy<Value = FiniteWord> {
    proptest::collection::vec(0u8..4, 1..max_len).prop_map(|v| FiniteWord::from_values(&v).unwrap())
}

fn arb_binary(max_len: usize) -> impl Strategy<Value = FiniteWord> {
    proptest::collection::vec(0u8..2, 1..max_len).prop_map(|v| FiniteWord::from_values(&v).unwrap())
}

proptest! {
    #[test]
    fn factors_concatenate(period in arb_word(7), j in 1usize..50, a in 0usize..20, b in 0usize..20) {
        let w = WordSpec::Periodic(period);
        let whole = factor(&w, j, a + b).unwrap();
        let parts = factor(&w, j, a).unwrap().concat(&factor(&w, j + a, b).unwrap());
        prop_assert_eq!(whole, parts);
    }

    #[test]
    fn periodic_words_repeat(period in arb_word(7), j in 1usize..100) {
        let p = period.len();
        let w = WordSpec::Periodic(period);
        prop_assert_eq!(letter_at(&w, j).unwrap(), letter_at(&w, j + p).unwrap());
    }

    #[test]
    fn gaps_reconstruct_window(text in arb_binary(80), beta in arb_binary(4)) {
        let horizon = text.len();
        let w = WordSpec::Explicit(text.clone());
        let r = gap_report(&w, &beta, horizon).unwrap();
        let overlapping = r.occurrences.windows(2).any(|p| p[1] - p[0] < beta.len());
        prop_assume!(r.occurrences.len() >= 2 && !overlapping);
        let first = r.occurrences[0];
        let last = *r.occurrences.last().unwrap();
        let mut rebuilt = FiniteWord::empty();
        for g in &r.gap_factors {
            rebuilt = rebuilt.concat(&beta).concat(g);
        }
        rebuilt = rebuilt.concat(&beta);
        let span = factor(&w, first, last + beta.len() - first).unwrap();
        prop_assert_eq!(rebuilt, span);
        for (g, p) in r.gap_factors.iter().zip(r.occurrences.windows(2)) {
            prop_assert_eq!(g.len(), p[1] - p[0] - beta.len());
        }
    }

    #[test]
    fn recurrence_window_matches_brute_force(text in arb_binary(60), beta in arb_binary(4)) {
        let w = WordSpec::Explicit(text.clone());
        let got = recurrence_window_estimate(&w, &beta, text.len()).unwrap();
        prop_assert_eq!(got, brute_recurrence(text.letters(), beta.letters()));
    }

    #[test]
    fn recurrence_window_is_tight(period in arb_binary(6), beta in arb_binary(3)) {
        let w = WordSpec::Periodic(period);
        let horizon = 120;
        if let Some(l) = recurrence_window_estimate(&w, &beta, horizon).unwrap() {
            let pre = w.prefix(horizon).unwrap();
            prop_assert!(pre.letters().windows(l).all(|x| FiniteWord::new(x.to_vec()).contains_factor(&beta)));
            if l > beta.len() {
                prop_assert!(pre.letters().windows(l - 1).any(|x| !FiniteWord::new(x.to_vec()).contains_factor(&beta)));
            }
        }
    }

    #[test]
    fn complexity_never_exceeds_window_count(text in arb_word(50), n in 1usize..6) {
        let horizon = text.len();
        let w = WordSpec::Explicit(text);
        let c = factor_complexity(&w, n, horizon).unwrap();
        prop_assert!(c <= horizon.saturating_sub(n) + 1);
        prop_assert!(c <= 4usize.pow(n as u32));
    }
}
