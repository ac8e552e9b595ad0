//! Infinitesimal-character bookkeeping: neutral-element eigenvalues of
//! type-A nilpotents, their transported coordinate vectors, the character
//! sets attached to an orbit through the transpose/collapse map, the
//! combinatorial multiplicity bound, and the pruned character tables.

use crate::num::{half, q, Q};
use crate::orbit::{
    associated_orbit_preimage, LieType, Numeral, OrbitDescriptor, OrbitError,
};
use crate::partition::Partition;
use crate::weight::{weyl_canonical, Weight};
use num_traits::Zero;

/// A character named by the type-A partition that produces it, together
/// with its coordinates in the ambient Cartan.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QUnipotentCharacter {
    pub source: Partition,
    pub coords: Weight,
}

/// Halved eigenvalues of the neutral semisimple element of a type-A
/// nilpotent: each part p contributes (p-1)/2, (p-3)/2, ..., -(p-1)/2.
/// Sorted non-increasing.
pub fn eigenvalue_halves(p: &Partition) -> Vec<Q> {
    let mut out = Vec::new();
    for &part in p.parts() {
        let p = part as i64;
        for k in 0..p {
            out.push(half(p - 1 - 2 * k));
        }
    }
    out.sort_unstable_by(|a, b| b.cmp(a));
    out
}

/// Coordinates of the transported character: all halved eigenvalues in
/// type A; positive halves plus floor(zeros/2) zeros otherwise, the
/// final coordinate negated under numeral II.
pub fn lambda_coords(
    source: &Partition,
    lie_type: LieType,
    rank: usize,
    numeral: Option<Numeral>,
) -> Result<Weight, OrbitError> {
    let want = lie_type.source_total(rank);
    if source.total() != want {
        return Err(OrbitError::WrongTotal {
            got: source.total(),
            want,
            letter: lie_type.letter(),
            rank,
        });
    }
    let halves = eigenvalue_halves(source);
    let coords = match lie_type {
        LieType::A => halves,
        _ => {
            let zeros = halves.iter().filter(|x| x.is_zero()).count();
            let mut v: Vec<Q> = halves.into_iter().filter(|x| *x > Q::zero()).collect();
            v.extend(std::iter::repeat(Q::zero()).take(zeros / 2));
            v.sort_unstable_by(|a, b| b.cmp(a));
            if numeral == Some(Numeral::II) {
                let last = v.len() - 1;
                v[last] = -v[last];
            }
            v
        }
    };
    debug_assert_eq!(coords.len(), rank);
    Ok(coords)
}

fn character(source: Partition, orbit: &OrbitDescriptor) -> QUnipotentCharacter {
    let coords = lambda_coords(&source, orbit.lie_type, orbit.rank, orbit.numeral)
        .expect("table source has the right total");
    QUnipotentCharacter { source, coords }
}

fn dedup_characters(mut v: Vec<QUnipotentCharacter>, lie_type: LieType) -> Vec<QUnipotentCharacter> {
    let mut seen: Vec<Weight> = Vec::new();
    v.retain(|c| {
        let canon = weyl_canonical(&c.coords, lie_type);
        if seen.contains(&canon) {
            false
        } else {
            seen.push(canon);
            true
        }
    });
    v
}

/// All characters attached to the orbit: one per source partition in the
/// preimage of the transpose/collapse map.
pub fn ic_set(orbit: &OrbitDescriptor) -> Vec<QUnipotentCharacter> {
    let sources = associated_orbit_preimage(orbit);
    dedup_characters(
        sources.into_iter().map(|s| character(s, orbit)).collect(),
        orbit.lie_type,
    )
}

/// Everything feeding the multiplicity bound for one source partition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiplicityData {
    /// r[i] = multiplicity of the coordinate i/2 (with -1/2 counted as an
    /// extra 1/2).
    pub r_counts: Vec<usize>,
    pub kappa: usize,
    pub relevant_strings: Vec<StringData>,
    pub nu: usize,
    pub mu: usize,
    pub exponent: u32,
    pub multiplicity: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StringData {
    /// Inclusive integer span [lo, hi].
    pub span: (usize, usize),
    pub even_marks: Vec<usize>,
    pub odd_marks: Vec<usize>,
    pub kappa_prime: usize,
    pub kappa_s: usize,
}

fn r_counts(coords: &Weight) -> Vec<usize> {
    let mut max_i = 0usize;
    for &c in coords {
        let a = if c == half(-1) { half(1) } else { c };
        assert!(a >= Q::zero(), "unexpected negative coordinate {a}");
        let doubled = a * q(2);
        assert!(doubled.is_integer());
        max_i = max_i.max(doubled.to_integer() as usize);
    }
    let mut r = vec![0usize; max_i + 2];
    for &c in coords {
        let a = if c == half(-1) { half(1) } else { c };
        let i = (a * q(2)).to_integer() as usize;
        r[i] += 1;
    }
    r
}

fn r_at(r: &[usize], i: usize) -> usize {
    if i < r.len() {
        r[i]
    } else {
        0
    }
}

/// Chunk forms for the count of parity blocks in a multiplicity-free
/// partition: value/multiplicity runs taken left to right.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Chunk {
    PairOddOdd,
    SingleEven,
    SingleOddBeforeEven,
}

fn chunks(p: &Partition) -> Vec<Chunk> {
    let mut runs: Vec<(u32, usize)> = Vec::new();
    for &v in p.parts() {
        match runs.last_mut() {
            Some((val, mult)) if *val == v => *mult += 1,
            _ => runs.push((v, 1)),
        }
    }
    let mut out = Vec::new();
    let mut i = 0;
    while i < runs.len() {
        let (_, mult) = runs[i];
        if mult % 2 == 1 && i + 1 < runs.len() && runs[i + 1].1 % 2 == 1 {
            out.push(Chunk::PairOddOdd);
            i += 2;
        } else if mult % 2 == 0 {
            out.push(Chunk::SingleEven);
            i += 1;
        } else {
            out.push(Chunk::SingleOddBeforeEven);
            i += 1;
        }
    }
    out
}

fn nu_orthogonal_odd_style(p: &Partition) -> usize {
    // Pair chunks plus even-multiplicity singles.
    chunks(p)
        .into_iter()
        .filter(|c| matches!(c, Chunk::PairOddOdd | Chunk::SingleEven))
        .count()
}

fn nu_with_tail_rule(p: &Partition) -> usize {
    let ch = chunks(p);
    let nu1 = ch.iter().filter(|c| matches!(c, Chunk::PairOddOdd)).count();
    let c_pos = ch.iter().position(|c| matches!(c, Chunk::SingleOddBeforeEven));
    let nu2 = match c_pos {
        None => 0,
        Some(pos) => {
            1 + ch[pos + 1..]
                .iter()
                .filter(|c| matches!(c, Chunk::SingleEven))
                .count()
        }
    };
    nu1 + nu2
}

fn odd_parts(p: &Partition) -> Partition {
    Partition::new(p.parts().iter().copied().filter(|v| v % 2 == 1).collect())
}

fn even_parts(p: &Partition) -> Partition {
    Partition::new(p.parts().iter().copied().filter(|v| v % 2 == 0).collect())
}

/// Multiplicity of the character of `source` in the characteristic cycle,
/// by the combinatorial formulas: trivial in type A, the full relevant-
/// string count in type C, and the spherical shortcut in types B and D.
pub fn multiplicity(
    source: &Partition,
    orbit: &OrbitDescriptor,
) -> Result<MultiplicityData, OrbitError> {
    if !orbit.flags().spherical {
        return Err(OrbitError::NotSpherical(orbit.partition.clone()));
    }
    let coords = lambda_coords(source, orbit.lie_type, orbit.rank, None)?;
    let r = if orbit.lie_type == LieType::A { Vec::new() } else { r_counts(&coords) };
    let empty = MultiplicityData {
        r_counts: r.clone(),
        kappa: 0,
        relevant_strings: Vec::new(),
        nu: 0,
        mu: 0,
        exponent: 0,
        multiplicity: 1,
    };
    match orbit.lie_type {
        LieType::A => Ok(empty),
        LieType::B => {
            // kappa: even positive i with r_i odd, r_{i-1} even.
            let kappa = (1..r.len())
                .filter(|&i| i % 2 == 0 && r[i] % 2 == 1 && r_at(&r, i - 1) % 2 == 0)
                .count();
            // Exception: three odd parts ending in 1.
            let parts = source.parts();
            let exceptional = parts.len() == 3
                && parts[2] == 1
                && parts[0] % 2 == 1
                && parts[1] % 2 == 1;
            let exponent = (2 * kappa).saturating_sub(usize::from(exceptional)) as u32;
            Ok(MultiplicityData {
                kappa,
                exponent,
                multiplicity: 1u64 << exponent,
                ..empty
            })
        }
        LieType::D => {
            let i0 = (1..r.len()).step_by(2).find(|&i| r[i] % 2 == 1);
            let kappa = (1..r.len())
                .filter(|&i| {
                    i % 2 == 1
                        && r[i] % 2 == 1
                        && (r_at(&r, i - 1) % 2 == 0 || Some(i) == i0)
                })
                .count();
            let n_d = 2 * kappa;
            let exponent = n_d.saturating_sub(2) as u32;
            Ok(MultiplicityData {
                kappa,
                exponent,
                multiplicity: 1u64 << exponent,
                ..empty
            })
        }
        LieType::C => {
            // Relevant strings: maximal integer spans [lo, hi], hi > lo,
            // with r_m odd on (lo, hi], anchored at an odd r_lo or at the
            // balanced zero head.
            let max_i = r.len();
            let mut candidates: Vec<(usize, usize)> = Vec::new();
            for lo in 0..max_i {
                let anchored = if lo == 0 {
                    2 * r_at(&r, 0) == r_at(&r, 2).saturating_sub(1)
                        && r_at(&r, 2) % 2 == 1
                } else {
                    r[lo] % 2 == 1
                };
                if !anchored {
                    continue;
                }
                let mut hi = lo;
                while r_at(&r, hi + 1) % 2 == 1 {
                    hi += 1;
                }
                if hi > lo {
                    candidates.push((lo, hi));
                }
            }
            candidates.sort_unstable();
            candidates.dedup();
            let maximal: Vec<(usize, usize)> = candidates
                .iter()
                .copied()
                .filter(|&(lo, hi)| {
                    !candidates
                        .iter()
                        .any(|&(l2, h2)| (l2, h2) != (lo, hi) && l2 <= lo && hi <= h2)
                })
                .collect();
            let mut strings: Vec<StringData> = maximal
                .into_iter()
                .map(|(lo, hi)| {
                    let even_marks: Vec<usize> = (lo..=hi)
                        .filter(|&i| {
                            i % 2 == 0
                                && i > 0
                                && ((r_at(&r, i) > 1 && i > 2) || r_at(&r, i - 1) != 1)
                        })
                        .collect();
                    let odd_marks: Vec<usize> =
                        (lo..=hi).filter(|&i| i % 2 == 1 && r_at(&r, i) > 1).collect();
                    let len = hi - lo + 1;
                    let kappa_prime =
                        (even_marks.len() + odd_marks.len()).saturating_sub(len - 2);
                    StringData {
                        span: (lo, hi),
                        even_marks,
                        odd_marks,
                        kappa_prime,
                        kappa_s: 0,
                    }
                })
                .collect();
            strings.sort_by(|a, b| b.kappa_prime.cmp(&a.kappa_prime).then(a.span.cmp(&b.span)));
            let nu = nu_with_tail_rule(&odd_parts(source));
            let mu = nu_orthogonal_odd_style(&even_parts(source).collapse(0));
            let nu_star = nu.saturating_sub(1);
            let mu_star = mu.saturating_sub(1);
            let mut even_seen = 0usize;
            let mut odd_seen = 0usize;
            for s in strings.iter_mut() {
                let mut kappa_s = 0;
                for _ in &s.even_marks {
                    even_seen += 1;
                    if even_seen <= nu_star {
                        kappa_s += 1;
                    }
                }
                for _ in &s.odd_marks {
                    odd_seen += 1;
                    if odd_seen <= mu_star {
                        kappa_s += 1;
                    }
                }
                s.kappa_s = kappa_s;
            }
            let exponent: u32 = strings
                .iter()
                .map(|s| {
                    let len = s.span.1 - s.span.0 + 1;
                    (len.saturating_sub(2).saturating_sub(s.kappa_s)) as u32
                })
                .sum();
            Ok(MultiplicityData {
                relevant_strings: strings,
                nu,
                mu,
                exponent,
                multiplicity: 1u64 << exponent,
                ..empty
            })
        }
    }
}

/// IC with the multiplicity bound applied: characters whose multiplicity
/// stays within the orbit fundamental group.
pub fn pruned_ic_set(orbit: &OrbitDescriptor) -> Vec<QUnipotentCharacter> {
    let pi1 = orbit.pi1_order();
    dedup_characters(
        associated_orbit_preimage(orbit)
            .into_iter()
            .filter(|s| {
                multiplicity(s, orbit)
                    .map(|m| m.multiplicity <= pi1)
                    .unwrap_or(false)
            })
            .map(|s| character(s, orbit))
            .collect(),
        orbit.lie_type,
    )
}

/// The pruned character set of a spherical orbit, row by row: the single
/// transpose in type A, explicit source lists otherwise, deduplicated up
/// to the Weyl action.
pub fn ic1_set(orbit: &OrbitDescriptor) -> Result<Vec<QUnipotentCharacter>, OrbitError> {
    if !orbit.flags().spherical {
        return Err(OrbitError::NotSpherical(orbit.partition.clone()));
    }
    let sources = ic1_sources(orbit);
    for s in &sources {
        debug_assert!(
            associated_orbit_preimage(orbit).contains(s),
            "pruned source {s} of {orbit} must sit in the preimage"
        );
    }
    Ok(dedup_characters(
        sources.into_iter().map(|s| character(s, orbit)).collect(),
        orbit.lie_type,
    ))
}

fn ic1_sources(orbit: &OrbitDescriptor) -> Vec<Partition> {
    let p = &orbit.partition;
    let n = orbit.rank as u32;
    let threes = p.multiplicity(3) as u32;
    let twos = p.multiplicity(2) as u32;
    let ones = p.multiplicity(1) as u32;
    let mk = |parts: &[u32]| Partition::new(parts.to_vec());
    match orbit.lie_type {
        LieType::A => vec![p.transpose()],
        LieType::B => {
            if threes == 0 {
                let k = twos / 2;
                vec![mk(&[2 * n - 2 * k, 2 * k + 1])]
            } else if twos == 0 {
                if n == 2 {
                    vec![mk(&[2, 2, 1]), mk(&[2, 1, 1, 1]), mk(&[3, 1, 1])]
                } else {
                    vec![mk(&[2 * n - 2, 2, 1]), mk(&[2 * n - 2, 1, 1, 1])]
                }
            } else if ones == 0 {
                vec![mk(&[n, n, 1])]
            } else {
                let k = twos / 2;
                vec![mk(&[2 * n - 2 * k - 2, 2 * k + 2, 1])]
            }
        }
        LieType::C => {
            let k = twos;
            if k == 0 {
                vec![mk(&[2 * n + 1])]
            } else if k == 2 && n == 2 {
                vec![mk(&[2, 2, 1]), mk(&[3, 1, 1]), mk(&[3, 2])]
            } else if k == n {
                vec![mk(&[n, n, 1]), mk(&[n + 1, n - 1, 1])]
            } else if k == 2 {
                vec![mk(&[2 * n - 1, 1, 1]), mk(&[2 * n - 1, 2])]
            } else {
                vec![mk(&[2 * n - k + 1, k - 1, 1])]
            }
        }
        LieType::D => {
            if threes == 0 {
                if ones == 0 {
                    vec![mk(&[n, n])]
                } else {
                    let k = twos / 2;
                    vec![mk(&[2 * n - 2 * k - 1, 2 * k + 1])]
                }
            } else if twos == 0 {
                vec![mk(&[2 * n - 3, 2, 1]), mk(&[2 * n - 3, 1, 1, 1])]
            } else {
                let k = twos / 2;
                vec![mk(&[2 * n - 2 * k - 3, 2 * k + 2, 1])]
            }
        }
    }
}
