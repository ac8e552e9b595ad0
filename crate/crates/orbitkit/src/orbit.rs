//! Nilpotent orbits of the classical Lie algebras, named by partitions,
//! together with their classification flags, dimensions, fundamental
//! groups, and the transpose/collapse map from type-A orbits.

use crate::partition::{partitions_of, Partition};
use serde::{Deserialize, Serialize};
use std::fmt;
use thiserror::Error;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub enum LieType {
    A,
    B,
    C,
    D,
}

impl LieType {
    pub fn letter(self) -> char {
        match self {
            LieType::A => 'A',
            LieType::B => 'B',
            LieType::C => 'C',
            LieType::D => 'D',
        }
    }

    pub fn parse(s: &str) -> Option<LieType> {
        match s.trim() {
            "A" | "a" => Some(LieType::A),
            "B" | "b" => Some(LieType::B),
            "C" | "c" => Some(LieType::C),
            "D" | "d" => Some(LieType::D),
            _ => None,
        }
    }

    pub fn min_rank(self) -> usize {
        match self {
            LieType::A => 1,
            LieType::B | LieType::C => 2,
            LieType::D => 4,
        }
    }

    /// Size of the partitions labelling nilpotent orbits at this rank.
    /// Type A uses the general-linear convention: partitions of the rank.
    pub fn orbit_total(self, rank: usize) -> u32 {
        match self {
            LieType::A => rank as u32,
            LieType::B => 2 * rank as u32 + 1,
            LieType::C | LieType::D => 2 * rank as u32,
        }
    }

    /// Parity whose parts must have even multiplicity: even parts in the
    /// orthogonal types, odd parts in the symplectic type.
    pub fn constrained_parity(self) -> Option<u32> {
        match self {
            LieType::A => None,
            LieType::B | LieType::D => Some(0),
            LieType::C => Some(1),
        }
    }

    /// Size of the type-A partitions feeding the transpose/collapse map.
    pub fn source_total(self, rank: usize) -> u32 {
        match self {
            LieType::A => rank as u32,
            LieType::B | LieType::C => 2 * rank as u32 + 1,
            LieType::D => 2 * rank as u32,
        }
    }

    pub fn algebra_dim(self, rank: usize) -> u32 {
        let n = rank as u32;
        match self {
            LieType::A => n * n,
            LieType::B => (2 * n + 1) * n,
            LieType::C => n * (2 * n + 1),
            LieType::D => n * (2 * n - 1),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub enum Numeral {
    I,
    II,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum OrbitError {
    #[error("partition of {got} does not match the required total {want} for {letter}{rank}")]
    WrongTotal { got: u32, want: u32, letter: char, rank: usize },
    #[error("rank {rank} is below the minimum for type {letter}")]
    RankTooSmall { letter: char, rank: usize },
    #[error("parity condition violated: {0} is not a valid type-{1} partition")]
    Parity(Partition, char),
    #[error("numeral only applies to very even partitions in type D")]
    SpuriousNumeral,
    #[error("orbit is not spherical: {0}")]
    NotSpherical(Partition),
}

/// A nilpotent orbit: Lie type, rank, partition, and (for very even
/// type-D partitions) a numeral distinguishing the two orbits.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct OrbitDescriptor {
    pub lie_type: LieType,
    pub rank: usize,
    pub partition: Partition,
    pub numeral: Option<Numeral>,
}

impl fmt::Debug for OrbitDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}[{}]", self.lie_type.letter(), self.rank, self.partition)?;
        match self.numeral {
            Some(Numeral::I) => write!(f, " I"),
            Some(Numeral::II) => write!(f, " II"),
            None => Ok(()),
        }
    }
}

impl fmt::Display for OrbitDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitFlags {
    pub spherical: bool,
    pub model: bool,
    pub rigid: bool,
    pub special: bool,
    pub very_even: bool,
}

impl OrbitDescriptor {
    /// Validates a partition as an orbit label for the given type and rank.
    /// A very even type-D partition gets numeral I unless one is supplied.
    pub fn new(
        lie_type: LieType,
        rank: usize,
        partition: Partition,
        numeral: Option<Numeral>,
    ) -> Result<OrbitDescriptor, OrbitError> {
        if rank < lie_type.min_rank() {
            return Err(OrbitError::RankTooSmall { letter: lie_type.letter(), rank });
        }
        let want = lie_type.orbit_total(rank);
        if partition.total() != want {
            return Err(OrbitError::WrongTotal {
                got: partition.total(),
                want,
                letter: lie_type.letter(),
                rank,
            });
        }
        if let Some(parity) = lie_type.constrained_parity() {
            if !partition.parity_valid(parity) {
                return Err(OrbitError::Parity(partition, lie_type.letter()));
            }
        }
        let very_even = lie_type == LieType::D && is_very_even(&partition);
        let numeral = match (very_even, numeral) {
            (true, Some(n)) => Some(n),
            (true, None) => Some(Numeral::I),
            (false, None) => None,
            (false, Some(_)) => return Err(OrbitError::SpuriousNumeral),
        };
        Ok(OrbitDescriptor { lie_type, rank, partition, numeral })
    }

    pub fn zero(lie_type: LieType, rank: usize) -> OrbitDescriptor {
        let total = lie_type.orbit_total(rank);
        OrbitDescriptor::new(lie_type, rank, Partition::new(vec![1; total as usize]), None)
            .expect("zero orbit is always valid")
    }

    /// Complex dimension of the orbit.
    pub fn dim(&self) -> u32 {
        orbit_dim(self.lie_type, &self.partition)
    }

    /// Order of the orbit's fundamental group.
    ///
    /// "Rather odd" is read as: every part is odd. This is the reading
    /// forced by the character tables downstream; see `characters`.
    pub fn pi1_order(&self) -> u64 {
        let p = &self.partition;
        let distinct_odd = {
            let mut vals: Vec<u32> = p.parts().iter().copied().filter(|v| v % 2 == 1).collect();
            vals.dedup();
            vals.len() as u32
        };
        let distinct_even = {
            let mut vals: Vec<u32> = p.parts().iter().copied().filter(|v| v % 2 == 0).collect();
            vals.dedup();
            vals.len() as u32
        };
        let rather_odd = p.parts().iter().all(|&v| v % 2 == 1);
        match self.lie_type {
            LieType::A => {
                let g = p.parts().iter().fold(0u32, |acc, &v| gcd(acc, v));
                g.max(1) as u64
            }
            LieType::B => {
                if rather_odd {
                    1u64 << distinct_odd
                } else {
                    1u64 << distinct_odd.saturating_sub(1)
                }
            }
            LieType::C => 1u64 << distinct_even,
            LieType::D => {
                let base = 1u64 << distinct_odd.saturating_sub(1).max(0);
                if rather_odd {
                    2 * base
                } else {
                    base
                }
            }
        }
    }

    pub fn flags(&self) -> OrbitFlags {
        let p = &self.partition;
        let spherical = is_spherical(self.lie_type, p);
        let model = spherical && *p == model_partition(self.lie_type, self.rank);
        let rigid = spherical && !in_non_rigid_list(self.lie_type, p);
        let special = match self.lie_type {
            LieType::A => true,
            _ => spherical && in_special_list(self.lie_type, p),
        };
        OrbitFlags {
            spherical,
            model,
            rigid,
            special,
            very_even: self.lie_type == LieType::D && is_very_even(p),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.partition.parts().iter().all(|&v| v == 1)
    }
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Orbit dimension straight from the partition, valid at any size (used
/// along truncation chains that pass below the descriptor rank floor).
pub fn orbit_dim(lie_type: LieType, p: &Partition) -> u32 {
    let total = p.total();
    let sq: u32 = p.transpose().parts().iter().map(|&c| c * c).sum();
    let odd = p.parts().iter().filter(|&&v| v % 2 == 1).count() as u32;
    match lie_type {
        LieType::A => total * total - sq,
        LieType::B | LieType::D => total * (total - 1) / 2 - (sq - odd) / 2,
        LieType::C => total * (total + 1) / 2 - (sq + odd) / 2,
    }
}

pub fn is_very_even(p: &Partition) -> bool {
    !p.is_empty()
        && p.parts().iter().all(|&v| v % 2 == 0)
        && p.parts().iter().all(|&v| p.multiplicity(v) % 2 == 0)
}

/// Spherical partition shapes: [2^b 1^c] in type A, [2^b 1^{2c}] in type C,
/// [3^a 2^{2b} 1^c] with a <= 1 in types B and D.
pub fn is_spherical(lie_type: LieType, p: &Partition) -> bool {
    let threes = p.multiplicity(3);
    let twos = p.multiplicity(2);
    if p.parts().iter().any(|&v| v > 3) {
        return false;
    }
    match lie_type {
        LieType::A => threes == 0,
        LieType::C => threes == 0,
        LieType::B | LieType::D => threes <= 1 && twos % 2 == 0,
    }
}

fn in_special_list(lie_type: LieType, p: &Partition) -> bool {
    let threes = p.multiplicity(3);
    let twos = p.multiplicity(2);
    let ones = p.multiplicity(1);
    match lie_type {
        LieType::A => true,
        LieType::B => threes == 1 || (threes == 0 && twos == 0),
        LieType::C => twos % 2 == 0 || ones == 0,
        LieType::D => (threes == 0 && twos % 2 == 0) || (threes == 1 && twos == 0),
    }
}

fn in_non_rigid_list(lie_type: LieType, p: &Partition) -> bool {
    let threes = p.multiplicity(3);
    let twos = p.multiplicity(2);
    let ones = p.multiplicity(1);
    match lie_type {
        LieType::A => !p.is_empty() && p.part(1) > 1,
        LieType::B => (threes == 1 && twos == 0) || (threes == 0 && ones == 2),
        LieType::C => (threes == 0 && twos == 2) || (ones == 0 && twos % 2 == 0),
        LieType::D => (threes == 1 && twos == 0) || (threes == 0 && ones == 0 && twos % 2 == 0),
    }
}

/// Largest spherical partition for the type and rank, in dominance order.
pub fn model_partition(lie_type: LieType, rank: usize) -> Partition {
    let total = lie_type.orbit_total(rank);
    let mut best: Option<Partition> = None;
    for p in partitions_of(total) {
        if !is_spherical(lie_type, &p) {
            continue;
        }
        if let Some(parity) = lie_type.constrained_parity() {
            if !p.parity_valid(parity) {
                continue;
            }
        }
        best = match best {
            None => Some(p),
            Some(b) => {
                if b.dominated_by(&p) {
                    Some(p)
                } else {
                    debug_assert!(p.dominated_by(&b), "spherical maxima must be comparable");
                    Some(b)
                }
            }
        };
    }
    best.expect("every type/rank has a spherical partition")
}

/// All spherical orbits at the given type and rank, very even partitions
/// contributing both numerals. Deterministic (dominance-descending-ish
/// lexicographic) order.
pub fn spherical_orbits(lie_type: LieType, rank: usize) -> Vec<OrbitDescriptor> {
    let total = lie_type.orbit_total(rank);
    let mut out = Vec::new();
    for p in partitions_of(total) {
        if !is_spherical(lie_type, &p) {
            continue;
        }
        if let Some(parity) = lie_type.constrained_parity() {
            if !p.parity_valid(parity) {
                continue;
            }
        }
        if lie_type == LieType::D && is_very_even(&p) {
            out.push(OrbitDescriptor::new(lie_type, rank, p.clone(), Some(Numeral::I)).unwrap());
            out.push(OrbitDescriptor::new(lie_type, rank, p, Some(Numeral::II)).unwrap());
        } else {
            out.push(OrbitDescriptor::new(lie_type, rank, p, None).unwrap());
        }
    }
    out
}

/// Image of a type-A nilpotent orbit under transpose-and-collapse:
/// `p^t` in type A, the orthogonal collapse of `p^t` in types B and D,
/// and the symplectic collapse of `p^t` less one unit in type C.
/// Very even images in type D yield both numerals.
pub fn associated_orbit(
    source: &Partition,
    lie_type: LieType,
    rank: usize,
) -> Result<Vec<OrbitDescriptor>, OrbitError> {
    let want = lie_type.source_total(rank);
    if source.total() != want {
        return Err(OrbitError::WrongTotal {
            got: source.total(),
            want,
            letter: lie_type.letter(),
            rank,
        });
    }
    let t = source.transpose();
    let image = match lie_type {
        LieType::A => t,
        LieType::B => t.collapse(0),
        LieType::C => t.decrement_smallest().collapse(1),
        LieType::D => t.collapse(0),
    };
    if lie_type == LieType::D && is_very_even(&image) {
        Ok(vec![
            OrbitDescriptor::new(lie_type, rank, image.clone(), Some(Numeral::I))?,
            OrbitDescriptor::new(lie_type, rank, image, Some(Numeral::II))?,
        ])
    } else {
        Ok(vec![OrbitDescriptor::new(lie_type, rank, image, None)?])
    }
}

/// All type-A partitions mapping onto the given orbit under
/// `associated_orbit`, by exhaustive search. Numerals are ignored for
/// membership: a very even image matches either numeral.
pub fn associated_orbit_preimage(orbit: &OrbitDescriptor) -> Vec<Partition> {
    let total = orbit.lie_type.source_total(orbit.rank);
    partitions_of(total)
        .into_iter()
        .filter(|q| match associated_orbit(q, orbit.lie_type, orbit.rank) {
            Ok(images) => images.iter().any(|img| img.partition == orbit.partition),
            Err(_) => false,
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec())
    }

    #[test]
    fn validate_examples() {
        assert!(OrbitDescriptor::new(LieType::C, 4, p(&[2, 2, 2, 1, 1]), None).is_ok());
        assert!(OrbitDescriptor::new(LieType::A, 5, p(&[1; 5]), None).is_ok());
        assert_eq!(
            OrbitDescriptor::new(LieType::C, 2, p(&[3, 1]), None),
            Err(OrbitError::Parity(p(&[3, 1]), 'C'))
        );
        // Very even type D defaults to numeral I.
        let o = OrbitDescriptor::new(LieType::D, 4, p(&[2, 2, 2, 2]), None).unwrap();
        assert_eq!(o.numeral, Some(Numeral::I));
    }

    #[test]
    fn dims() {
        let o = OrbitDescriptor::new(LieType::C, 4, p(&[2, 2, 2, 1, 1]), None).unwrap();
        assert_eq!(o.dim(), 18);
        assert_eq!(OrbitDescriptor::zero(LieType::C, 4).dim(), 0);
        let m = OrbitDescriptor::new(LieType::A, 9, p(&[5, 3, 1]), None).unwrap();
        assert_eq!(m.dim(), 62);
    }

    #[test]
    fn pi1_examples() {
        let o = OrbitDescriptor::new(LieType::C, 4, p(&[2, 2, 2, 1, 1]), None).unwrap();
        assert_eq!(o.pi1_order(), 2);
        assert_eq!(OrbitDescriptor::zero(LieType::C, 3).pi1_order(), 1);
        // Two distinct odd parts, an even part present: 2^(a-1).
        let o = OrbitDescriptor::new(LieType::D, 4, p(&[3, 2, 2, 1]), None).unwrap();
        assert_eq!(o.pi1_order(), 2);
    }

    #[test]
    fn classify_examples() {
        let o = OrbitDescriptor::new(LieType::A, 6, p(&[2, 2, 2]), None).unwrap();
        let f = o.flags();
        assert!(f.spherical && f.model && !f.rigid);
        let o = OrbitDescriptor::new(LieType::A, 6, p(&[3, 3]), None).unwrap();
        assert!(!o.flags().spherical);
        let o = OrbitDescriptor::new(LieType::C, 3, p(&[2, 2, 1, 1]), None).unwrap();
        let f = o.flags();
        assert!(f.spherical && !f.model && !f.rigid);
        // The minimal symplectic orbit is rigid.
        let o = OrbitDescriptor::new(LieType::C, 2, p(&[2, 1, 1]), None).unwrap();
        assert!(o.flags().rigid);
    }

    #[test]
    fn model_partitions() {
        assert_eq!(model_partition(LieType::C, 4), p(&[2, 2, 2, 2]));
        assert_eq!(model_partition(LieType::A, 6), p(&[2, 2, 2]));
        assert_eq!(model_partition(LieType::A, 7), p(&[2, 2, 2, 1]));
        assert_eq!(model_partition(LieType::B, 4), p(&[3, 2, 2, 1, 1]));
        assert_eq!(model_partition(LieType::D, 4), p(&[3, 2, 2, 1]));
    }

    #[test]
    fn associated_orbit_examples() {
        let images = associated_orbit(&p(&[6, 3]), LieType::C, 4).unwrap();
        assert_eq!(images.len(), 1);
        assert_eq!(images[0].partition, p(&[2, 2, 2, 1, 1]));

        let images = associated_orbit(&p(&[4, 4]), LieType::D, 4).unwrap();
        assert_eq!(images.len(), 2);
        assert_eq!(images[0].partition, p(&[2, 2, 2, 2]));
        assert_eq!(images[0].numeral, Some(Numeral::I));
        assert_eq!(images[1].numeral, Some(Numeral::II));

        let images = associated_orbit(&p(&[3, 1]), LieType::A, 4).unwrap();
        assert_eq!(images[0].partition, p(&[2, 1, 1]));
    }

    #[test]
    fn preimage_examples() {
        let o = OrbitDescriptor::new(LieType::C, 4, p(&[2, 2, 2, 1, 1]), None).unwrap();
        let pre = associated_orbit_preimage(&o);
        assert!(pre.contains(&p(&[6, 3])));
        let o = OrbitDescriptor::new(LieType::C, 4, p(&[2, 2, 2, 2]), None).unwrap();
        assert!(associated_orbit_preimage(&o).contains(&p(&[4, 4, 1])));
        let zero = OrbitDescriptor::zero(LieType::A, 5);
        assert_eq!(associated_orbit_preimage(&zero), vec![p(&[5])]);
    }

    #[test]
    fn preimage_round_trip() {
        for rank in 2..=4 {
            for lt in [LieType::B, LieType::C, LieType::D] {
                if rank < lt.min_rank() {
                    continue;
                }
                for q in partitions_of(lt.source_total(rank)) {
                    let images = associated_orbit(&q, lt, rank).unwrap();
                    for img in images {
                        assert!(associated_orbit_preimage(&img).contains(&q));
                    }
                }
            }
        }
    }

    #[test]
    fn orbit_dim_is_even() {
        for rank in 2..=5 {
            for lt in [LieType::A, LieType::B, LieType::C, LieType::D] {
                if rank < lt.min_rank() {
                    continue;
                }
                for o in spherical_orbits(lt, rank) {
                    assert_eq!(o.dim() % 2, 0, "odd dimension for {o}");
                }
            }
        }
    }
}
