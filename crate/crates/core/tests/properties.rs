use std::collections::HashSet;

use pcx_core::atoms::{all_subsets, atom_automaton, atom_count, atom_of_word, reverse_complexity_full};
use pcx_core::bounds::binom;
use pcx_core::convexity::check_ideal_or_empty;
use pcx_core::transform::{letter_transformations, semigroup_elements, DEFAULT_SEMIGROUP_CAP};
use pcx_core::witness::{prefix_free, proper};
use pcx_core::*;
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

fn letters(k: usize) -> Vec<String> {
    (0..k).map(|i| ((b'a' + i as u8) as char).to_string()).collect()
}

fn random_dfa(rng: &mut StdRng, n: usize, k: usize, final_p: f64) -> Dfa {
    let delta = (0..k).map(|_| (0..n).map(|_| rng.gen_range(0..n)).collect()).collect();
    let finals: Vec<usize> = (0..n).filter(|_| rng.gen_bool(final_p)).collect();
    Dfa::new(n, letters(k), delta, 0, finals).unwrap()
}

fn random_word(rng: &mut StdRng, k: usize, max_len: usize) -> Vec<usize> {
    let len = rng.gen_range(0..=max_len);
    (0..len).map(|_| rng.gen_range(0..k)).collect()
}

fn names(d: &Dfa, w: &[usize]) -> Vec<String> {
    w.iter().map(|&c| d.alphabet()[c].clone()).collect()
}

/// Every word over `k` letters of length at most `max_len`.
fn all_words(k: usize, max_len: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    let mut layer = vec![vec![]];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &layer {
            for c in 0..k {
                let mut v: Vec<usize> = w.clone();
                v.push(c);
                next.push(v);
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

fn dfa_strategy() -> impl Strategy<Value = Dfa> {
    (1usize..=6, 1usize..=3).prop_flat_map(|(n, k)| {
        (proptest::collection::vec(proptest::collection::vec(0..n, n), k), proptest::collection::vec(any::<bool>(), n))
            .prop_map(move |(delta, fin)| {
                let finals = (0..n).filter(|&q| fin[q]);
                Dfa::new(n, letters(k), delta, 0, finals).unwrap()
            })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn minimize_is_idempotent_and_preserves_language(d in dfa_strategy(), seed in any::<u64>()) {
        let m = d.minimize();
        prop_assert_eq!(m.minimize(), m.clone());
        prop_assert!(m.state_count() <= d.state_count());
        prop_assert!(equivalent(&d, &m));
        let mut rng = StdRng::seed_from_u64(seed);
        for _ in 0..50 {
            let w = random_word(&mut rng, d.alphabet().len(), 12);
            prop_assert_eq!(d.accepts_indices(&w), m.accepts_indices(&w));
        }
    }

    #[test]
    fn reverse_of_reverse_is_equivalent(d in dfa_strategy()) {
        let rr = reverse(&reverse(&d).determinize()).determinize();
        prop_assert!(equivalent(&d, &rr));
    }

    #[test]
    fn reverse_accepts_mirrored_words(d in dfa_strategy(), seed in any::<u64>()) {
        let r = reverse(&d);
        let rd = r.determinize();
        let mut rng = StdRng::seed_from_u64(seed);
        for _ in 0..50 {
            let w = random_word(&mut rng, d.alphabet().len(), 12);
            let mirrored: Vec<usize> = w.iter().rev().copied().collect();
            let expected = d.accepts_indices(&mirrored);
            prop_assert_eq!(r.accepts(&names(&d, &w)), expected);
            prop_assert_eq!(rd.accepts_indices(&w), expected);
        }
    }

    #[test]
    fn star_membership(d in dfa_strategy(), seed in any::<u64>()) {
        let s = star(&d).determinize();
        let mut rng = StdRng::seed_from_u64(seed);
        for _ in 0..30 {
            let w = random_word(&mut rng, d.alphabet().len(), 8);
            // w ∈ L* iff w splits into factors of L
            let mut ok = vec![false; w.len() + 1];
            ok[0] = true;
            for end in 1..=w.len() {
                ok[end] = (0..end).any(|st| ok[st] && d.accepts_indices(&w[st..end]));
            }
            prop_assert_eq!(s.accepts_indices(&w), ok[w.len()]);
        }
    }

    #[test]
    fn concat_membership(a in dfa_strategy(), b in dfa_strategy(), seed in any::<u64>()) {
        let c = concat(&a, &b);
        let joint = joint_alphabet(a.alphabet(), b.alphabet());
        let mut rng = StdRng::seed_from_u64(seed);
        for _ in 0..30 {
            let len = rng.gen_range(0..=8);
            let w: Vec<String> = (0..len).map(|_| joint[rng.gen_range(0..joint.len())].clone()).collect();
            let expected = (0..=w.len()).any(|i| a.accepts(&w[..i]) && b.accepts(&w[i..]));
            prop_assert_eq!(c.accepts(&w), expected);
            prop_assert_eq!(c.determinize().accepts(&w), expected);
        }
    }

    #[test]
    fn de_morgan(a in dfa_strategy(), b in dfa_strategy()) {
        let lhs = boolean(&a, &b, BooleanOp::Union).complement();
        let joint = joint_alphabet(a.alphabet(), b.alphabet());
        let ca = a.complete(&joint).unwrap().complement();
        let cb = b.complete(&joint).unwrap().complement();
        let rhs = boolean(&ca, &cb, BooleanOp::Intersection);
        prop_assert!(equivalent(&lhs, &rhs));
    }

    #[test]
    fn atom_count_equals_reverse_complexity(d in dfa_strategy()) {
        prop_assert_eq!(atom_count(&d), reverse_complexity_full(&d));
    }

    #[test]
    fn dialect_swap_is_an_involution(d in dfa_strategy()) {
        prop_assume!(d.alphabet().len() >= 2);
        let swap = Dialect::parse("a=b,b=a").unwrap();
        let back = apply_dialect(&apply_dialect(&d, &swap).unwrap(), &swap).unwrap();
        prop_assert!(equivalent(&d, &back));
    }
}

#[test]
fn determinize_preserves_language_of_random_nfas() {
    let mut rng = StdRng::seed_from_u64(7);
    for _ in 0..100 {
        let n = rng.gen_range(1..=6);
        let alphabet = letters(2);
        let mut nfa = Nfa::new(n, alphabet.clone()).unwrap();
        for q in 0..n {
            for c in 0..2 {
                for t in 0..n {
                    if rng.gen_bool(0.25) {
                        nfa.add_transition(q, c, t);
                    }
                }
            }
            if rng.gen_bool(0.15) {
                nfa.add_epsilon(q, rng.gen_range(0..n));
            }
            if rng.gen_bool(0.3) {
                nfa.add_final(q);
            }
        }
        nfa.add_initial(0);
        let d = nfa.determinize();
        for _ in 0..50 {
            let w = random_word(&mut rng, 2, 12);
            let named: Vec<&str> = w.iter().map(|&c| alphabet[c].as_str()).collect();
            assert_eq!(nfa.accepts(&named), d.accepts_indices(&w));
        }
    }
}

#[test]
fn composition_is_associative() {
    for n in 1usize..=3 {
        let all: Vec<Transformation> = (0..n.pow(n as u32))
            .map(|mut code| {
                let mut images = Vec::with_capacity(n);
                for _ in 0..n {
                    images.push(code % n);
                    code /= n;
                }
                Transformation::new(images).unwrap()
            })
            .collect();
        for s in &all {
            for t in &all {
                let st = compose(s, t).unwrap();
                for u in &all {
                    let left = compose(&st, u).unwrap();
                    let right = compose(s, &compose(t, u).unwrap()).unwrap();
                    assert_eq!(left, right);
                }
            }
        }
    }
    let mut rng = StdRng::seed_from_u64(1);
    for _ in 0..2000 {
        let mut r = || Transformation::new((0..4).map(|_| rng.gen_range(0..4)).collect()).unwrap();
        let (s, t, u) = (r(), r(), r());
        assert_eq!(compose(&compose(&s, &t).unwrap(), &u).unwrap(), compose(&s, &compose(&t, &u).unwrap()).unwrap());
    }
}

#[test]
fn atoms_partition_all_short_words() {
    let mut rng = StdRng::seed_from_u64(3);
    let words = all_words(2, 10);
    for _ in 0..10 {
        let n = rng.gen_range(1..=4);
        let d = random_dfa(&mut rng, n, 2, 0.4);
        let atoms: Vec<(Vec<usize>, Dfa)> = all_subsets(n).map(|s| (s.clone(), atom_automaton(&d, &s))).collect();
        for w in &words {
            let owners: Vec<&Vec<usize>> = atoms.iter().filter(|(_, a)| a.accepts_indices(w)).map(|(s, _)| s).collect();
            assert_eq!(owners, vec![&atom_of_word(&d, w)]);
        }
    }
}

#[test]
fn fifty_random_dfas_have_as_many_atoms_as_reverse_quotients() {
    let mut rng = StdRng::seed_from_u64(50);
    for _ in 0..50 {
        let n = rng.gen_range(1..=7);
        let k = rng.gen_range(1..=3);
        let d = random_dfa(&mut rng, n, k, 0.5);
        let report = atoms_report(&d).unwrap();
        assert_eq!(report.atom_count, reverse_complexity_full(&d));
    }
}

/// Brute-force prefix-convexity over words: `u ∈ L`, `uvz ∈ L` and
/// `uv ∉ L` never happen for `|u|, |v|, |z| <= 8`.
fn convex_by_words(d: &Dfa, words: &[Vec<usize>]) -> bool {
    let n = d.state_count();
    let live: Vec<bool> = (0..n).map(|q| words.iter().any(|z| d.is_final(d.run_from(q, z)))).collect();
    for u in words {
        let p = d.run_from(d.initial(), u);
        if !d.is_final(p) {
            continue;
        }
        for v in words {
            let r = d.run_from(p, v);
            if !d.is_final(r) && live[r] {
                return false;
            }
        }
    }
    true
}

#[test]
fn classifier_agrees_with_word_oracle() {
    let mut rng = StdRng::seed_from_u64(200);
    let words = all_words(2, 8);
    let mut checked = 0;
    let mut convex = 0;
    while checked < 200 {
        let n = rng.gen_range(1..=6);
        let p = rng.gen_range(0.1..0.9);
        let d = random_dfa(&mut rng, n, 2, p).minimize();
        if d.state_count() != n {
            continue;
        }
        let oracle = convex_by_words(&d, &words);
        assert_eq!(is_prefix_convex(&d), oracle);
        assert_eq!(classify(&d) != LanguageClass::NotPrefixConvex, oracle);
        convex += oracle as usize;
        checked += 1;
    }
    assert!(convex > 0);
}

#[test]
fn convex_languages_are_ideals_or_have_an_empty_quotient() {
    let mut rng = StdRng::seed_from_u64(11);
    let mut seen = 0;
    for _ in 0..3000 {
        let n = rng.gen_range(1..=5);
        let d = random_dfa(&mut rng, n, 2, 0.3);
        match check_ideal_or_empty(&d) {
            Ok(holds) => {
                assert!(holds);
                seen += 1;
            }
            Err(e) => assert_eq!(e, Error::NotPrefixConvex),
        }
    }
    assert!(seen > 100);
}

#[test]
fn witnesses_are_minimal_and_in_their_class() {
    for family in Family::ALL {
        for n in family.min_n()..=7 {
            let ks: Vec<Option<usize>> = if family.has_k() { (1..=n - 2).map(Some).collect() } else { vec![None] };
            for k in ks {
                let d = witness(&WitnessParams::new(family, n, k)).unwrap();
                assert_eq!(d.minimize().state_count(), n, "{family} n={n} k={k:?}");
                let report = classify_report(&d);
                assert_eq!(report.class, family.class(), "{family} n={n}");
                assert_eq!(report.k(), k);
            }
        }
    }
}

#[test]
fn ideal_and_closed_witnesses_generate_all_maps_fixing_the_last_state() {
    for n in 4..=5 {
        let gens = |d: Dfa| -> HashSet<Transformation> {
            let g: Vec<Transformation> = letter_transformations(&d).into_iter().map(|(_, t)| t).collect();
            semigroup_elements(&g, DEFAULT_SEMIGROUP_CAP).unwrap().unwrap().into_iter().collect()
        };
        let ideal = gens(witness::right_ideal(n).unwrap());
        let closed = gens(witness::prefix_closed(n).unwrap());
        assert!(closed.iter().all(|t| t.apply(n - 1) == n - 1));
        assert!(closed.is_subset(&ideal));
        assert_eq!(closed.len(), n.pow(n as u32 - 1));
    }
}

#[test]
fn proper_semigroup_keeps_finals_away_from_nonfinals() {
    for n in 3..=6 {
        for k in 1..=n - 2 {
            let d = proper(n, k).unwrap();
            let g: Vec<Transformation> = letter_transformations(&d).into_iter().map(|(_, t)| t).collect();
            let elems = semigroup_elements(&g, DEFAULT_SEMIGROUP_CAP).unwrap().unwrap();
            let f_lo = n - 1 - k;
            for t in &elems {
                assert_eq!(t.apply(n - 1), n - 1);
                for q in f_lo..n - 1 {
                    assert!(t.apply(q) >= f_lo, "final {q} sent to a non-final by {t:?}");
                }
            }
        }
    }
}

#[test]
fn restricted_bounds_never_exceed_unrestricted() {
    use Measure::*;
    let pairs = [
        (ProductRestricted, ProductUnrestricted),
        (UnionR, UnionU),
        (XorR, XorU),
        (DiffR, DiffU),
        (IntersectR, IntersectU),
    ];
    for family in Family::ALL {
        for m in 3..=9 {
            for n in 3..=9 {
                for j in 1..=7 {
                    for k in 1..=7 {
                        let (j, k) = if family.has_k() { (Some(j), Some(k)) } else { (None, None) };
                        for (r, u) in pairs {
                            let br = bound(&BoundQuery::binary(family, r, m, n, j, k));
                            let bu = bound(&BoundQuery::binary(family, u, m, n, j, k));
                            if let (Bound::Exact(x), Bound::Exact(y)) = (br, bu) {
                                assert!(x <= y, "{family} {r} ({m},{n})");
                            }
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn prefix_free_booleans_at_four_four_match_membership() {
    let (l, r) = witness::prefix_free_boolean_operands(4, 4).unwrap();
    let joint = joint_alphabet(l.alphabet(), r.alphabet());
    let mut rng = StdRng::seed_from_u64(44);
    for op in [BooleanOp::Union, BooleanOp::SymmetricDifference, BooleanOp::Difference, BooleanOp::Intersection] {
        let p = boolean(&l, &r, op);
        for _ in 0..300 {
            let len = rng.gen_range(0..=10);
            let w: Vec<&str> = (0..len).map(|_| joint[rng.gen_range(0..joint.len())].as_str()).collect();
            assert_eq!(p.accepts(&w), op.apply(l.accepts(&w), r.accepts(&w)));
        }
    }
}

#[test]
fn proper_permutation_lemma_holds() {
    for n in 3..=7 {
        for k in 1..=n - 2 {
            assert!(transform::check_proper_permutation_lemma(n, k).unwrap(), "n={n} k={k}");
        }
    }
}

/// Measured atom complexities of the prefix-free witness over
/// `a, b, c, e_0`. The middle range follows the double sum with `y` from 0,
/// which the closed form in [`atom_bound`] starts at 1.
#[test]
fn prefix_free_atom_measurements() {
    for n in 4..=6 {
        let d = apply_dialect(
            &prefix_free(n).unwrap(),
            &Dialect::positional(prefix_free(n).unwrap().alphabet(), &["a", "b", "c", "-", "e_0"]),
        )
        .unwrap();
        for s in all_subsets(n) {
            let measured = atom_complexity(&d, &s);
            let size = s.len();
            let expected = if s == [n - 2] {
                Some(2)
            } else if s.iter().any(|&q| q + 2 >= n) {
                None
            } else if size == 0 {
                Some((1 << (n - 2)) + (1 << (n - 3)) + 1)
            } else if size == n - 2 {
                Some((1 << (n - 2)) + 1)
            } else {
                let mut total = 2u128;
                for x in 1..=size {
                    for y in 0..=n - 2 - size {
                        total += binom(n - 2, x) * binom(n - 2 - x, y);
                    }
                }
                Some(total as usize)
            };
            assert_eq!(measured.value(), expected, "n={n} S={s:?}");
        }
    }
}
