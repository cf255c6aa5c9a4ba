use std::collections::BTreeSet;

use w22::algebra::{bracket_combinations, enumerate_nonpositive, GeneratorCombination};
use w22::{bracket, ratio, Generator, Partition};

fn generators(bound: i64) -> Vec<Generator> {
    let mut out = vec![Generator::Z];
    for n in -bound..=bound {
        out.push(Generator::L(n));
        out.push(Generator::W(n));
    }
    out
}

#[test]
fn antisymmetry_and_jacobi_on_all_small_generators() {
    let gens = generators(6);
    for &a in &gens {
        for &b in &gens {
            let mut s = bracket(a, b);
            s.add(&bracket(b, a));
            assert!(s.is_zero(), "[{a},{b}] + [{b},{a}] = {s}");
        }
    }
    let combos: Vec<GeneratorCombination> = gens.iter().map(|&g| g.into()).collect();
    for x in &combos {
        for y in &combos {
            let xy = bracket_combinations(x, y);
            for c in &combos {
                let mut s = bracket_combinations(x, &bracket_combinations(y, c));
                s.add(&bracket_combinations(y, &bracket_combinations(c, x)));
                s.add(&bracket_combinations(c, &xy));
                assert!(s.is_zero(), "jacobi fails on {x}, {y}, {c}: {s}");
            }
        }
    }
}

#[test]
fn bracket_respects_grading() {
    for &a in &generators(5) {
        for &b in &generators(5) {
            for (g, _) in bracket(a, b).iter() {
                assert_eq!(g.grade(), a.grade() + b.grade(), "[{a},{b}] contains {g}");
            }
        }
    }
}

#[test]
fn central_term_only_on_opposite_indices() {
    for n in -6..=6i64 {
        for m in -6..=6i64 {
            for (a, b) in [
                (Generator::L(n), Generator::L(m)),
                (Generator::L(n), Generator::W(m)),
            ] {
                let c = bracket(a, b).coefficient(Generator::Z);
                let expected = if n + m == 0 {
                    ratio(n * n * n - n, 12)
                } else {
                    ratio(0, 1)
                };
                assert_eq!(c, expected, "[{a},{b}]");
            }
        }
    }
}

#[test]
fn w_part_is_abelian_ideal() {
    for n in -6..=6 {
        for m in -6..=6 {
            assert!(bracket(Generator::W(n), Generator::W(m)).is_zero());
            for (g, _) in bracket(Generator::L(n), Generator::W(m)).iter() {
                assert!(matches!(g, Generator::W(_) | Generator::Z));
            }
        }
    }
}

/// Every non-decreasing sequence with parts in `[-n, 0]`, at most `h` parts and weight `≥ -n`.
fn brute_force(n: i64, h: usize) -> BTreeSet<Vec<i64>> {
    let mut out = BTreeSet::new();
    let mut frontier = vec![vec![]];
    while let Some(p) = frontier.pop() {
        out.insert(p.clone());
        if p.len() == h {
            continue;
        }
        let lo = p.last().copied().unwrap_or(-n);
        for next in lo..=0 {
            let mut q = p.clone();
            q.push(next);
            if q.iter().sum::<i64>() >= -n {
                frontier.push(q);
            }
        }
    }
    out
}

#[test]
fn enumeration_matches_brute_force() {
    for n in 0..=5u32 {
        for h in 0..=4u32 {
            let got = enumerate_nonpositive(n, h);
            let set: BTreeSet<Vec<i64>> = got.iter().map(|p| p.parts().to_vec()).collect();
            assert_eq!(set.len(), got.len(), "duplicates for N={n}, H={h}");
            assert_eq!(set, brute_force(n as i64, h as usize), "N={n}, H={h}");
            assert!(
                got.windows(2).all(|w| w[0] < w[1]),
                "not sorted for N={n}, H={h}"
            );
        }
    }
}

#[test]
fn enumeration_examples() {
    let show = |n, h| {
        enumerate_nonpositive(n, h)
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join(" ")
    };
    assert_eq!(enumerate_nonpositive(2, 2).len(), 8);
    assert_eq!(show(0, 0), "0̄");
    assert_eq!(show(0, 2), "0̄ (0) (0,0)");
}

#[test]
fn slicing_reassembles() {
    let lam = Partition::new(vec![-3, -2, -2, -1, 0]);
    let r = lam.len();
    for i in 0..=r {
        let mut parts = lam.prefix(i).unwrap().parts().to_vec();
        parts.extend_from_slice(lam.suffix(i).unwrap().parts());
        assert_eq!(parts, lam.parts());
    }
    for i in 1..=r {
        let removed = lam.remove(i).unwrap();
        assert_eq!(removed.len(), r - 1);
        assert_eq!(removed.weight(), lam.weight() - lam.parts()[i - 1]);
    }
    assert!(lam.remove(0).is_err());
    assert!(lam.remove(r + 1).is_err());
    assert!(lam.prefix(r + 1).is_err());
}
