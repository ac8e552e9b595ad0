//! Weight arithmetic for the stabilizing parabolic: the density character
//! of a tableau, its corrected companion, the linear extension problem to
//! characters of the full parabolic, Weyl canonicalization, and the
//! dependent-interval permutations.

use crate::linalg;
use crate::num::{half, q, Q};
use crate::orbit::LieType;
use crate::tableau::{StandardTableau, StepCase};
use num_traits::Zero;

pub type Weight = Vec<Q>;

/// Half-sum of positive roots in e-coordinates.
pub fn rho(lie_type: LieType, rank: usize) -> Weight {
    let n = rank as i64;
    match lie_type {
        LieType::A => (0..rank).map(|i| half(n - 1 - 2 * i as i64)).collect(),
        LieType::B => (0..rank).map(|i| half(2 * (n - i as i64) - 1)).collect(),
        LieType::C => (0..rank).map(|i| q(n - i as i64)).collect(),
        LieType::D => (0..rank).map(|i| q(n - 1 - i as i64)).collect(),
    }
}

/// 1-based torus coordinate carrying a label: coordinates run left to
/// right while labels count up from the right.
pub fn label_coordinate(rank: usize, label: usize) -> usize {
    rank + 1 - label
}

/// Linear description of the weights of the stabilizer torus: which label
/// coordinates are tied together, pinned, or free.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstraintSystem {
    pub rank: usize,
    /// (column-2 label, its column-1 image): coordinates tied equal in the
    /// torus, so weight perturbations there are opposite.
    pub sum_zero_pairs: Vec<(usize, usize)>,
    /// Matched horizontal pairs (k, m): coordinates tied opposite in the
    /// torus, so weight perturbations there are equal.
    pub difference_zero_pairs: Vec<(usize, usize)>,
    /// Labels whose torus coordinate is pinned to zero; their weight
    /// entries are unconstrained.
    pub free_labels: Vec<usize>,
    /// Labels whose torus coordinate is free; their weight entries are
    /// pinned.
    pub pinned_labels: Vec<usize>,
}

impl ConstraintSystem {
    /// Directions along which a weight may move without changing its
    /// restriction to the stabilizer torus.
    pub fn directions(&self) -> Vec<Weight> {
        let n = self.rank;
        let mut dirs = Vec::new();
        let unit = |i: usize| {
            let mut v = vec![Q::zero(); n];
            v[i - 1] = q(1);
            v
        };
        for &(j, phi) in &self.sum_zero_pairs {
            let mut v = unit(label_coordinate(n, j));
            v[label_coordinate(n, phi) - 1] = q(-1);
            dirs.push(v);
        }
        for &(k, m) in &self.difference_zero_pairs {
            let mut v = unit(label_coordinate(n, m));
            v[label_coordinate(n, k) - 1] = q(1);
            dirs.push(v);
        }
        for &f in &self.free_labels {
            dirs.push(unit(label_coordinate(n, f)));
        }
        dirs
    }

    /// Basis of the stabilizer torus itself (the pairing dual of
    /// `directions`).
    pub fn torus_basis(&self) -> Vec<Weight> {
        let n = self.rank;
        let mut basis = Vec::new();
        let unit = |i: usize| {
            let mut v = vec![Q::zero(); n];
            v[i - 1] = q(1);
            v
        };
        for &p in &self.pinned_labels {
            basis.push(unit(label_coordinate(n, p)));
        }
        for &(j, phi) in &self.sum_zero_pairs {
            let mut v = unit(label_coordinate(n, j));
            v[label_coordinate(n, phi) - 1] = q(1);
            basis.push(v);
        }
        for &(k, m) in &self.difference_zero_pairs {
            let mut v = unit(label_coordinate(n, m));
            v[label_coordinate(n, k) - 1] = q(-1);
            basis.push(v);
        }
        basis
    }

    /// Equality of weights as functionals on the stabilizer torus.
    pub fn same_class(&self, a: &Weight, b: &Weight) -> bool {
        self.torus_basis()
            .iter()
            .all(|t| linalg::dot(a, t) == linalg::dot(b, t))
    }

    /// The tied class containing a 1-based coordinate, if any.
    fn class_of_coordinate(&self, coord: usize) -> ClassRef {
        let n = self.rank;
        for (i, &(j, phi)) in self.sum_zero_pairs.iter().enumerate() {
            if label_coordinate(n, j) == coord || label_coordinate(n, phi) == coord {
                return ClassRef::Sum(i);
            }
        }
        for (i, &(k, m)) in self.difference_zero_pairs.iter().enumerate() {
            if label_coordinate(n, k) == coord || label_coordinate(n, m) == coord {
                return ClassRef::Diff(i);
            }
        }
        for (i, &f) in self.free_labels.iter().enumerate() {
            if label_coordinate(n, f) == coord {
                return ClassRef::Free(i);
            }
        }
        ClassRef::Constant
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum ClassRef {
    Sum(usize),
    Diff(usize),
    Free(usize),
    Constant,
}

/// Builds the constraint system of a spherical tableau from its column
/// injection, matched pairs, and free horizontals.
pub fn constraint_system(t: &StandardTableau) -> ConstraintSystem {
    let n = t.rank;
    let phi = t.column_injection();
    let sets = t.horizontal_sets();
    let star = t.star_label();
    let mut free_labels: Vec<usize> = sets.unpaired.clone();
    free_labels.extend(&sets.offside);
    if let Some(s) = star {
        free_labels.push(s);
        // The star's would-be column-1 image loses its torus coordinate
        // along with the star's own.
        if let Some(shadow) = t.star_shadow() {
            free_labels.push(shadow);
        }
    }
    // An offside horizontal ties its predecessor's torus coordinate to its
    // own vanishing one, so the predecessor's entry is free unless the
    // column injection took it.
    for &m in &sets.offside {
        if m >= 2 && !phi.iter().any(|&(_, img)| img == m - 1) && !free_labels.contains(&(m - 1))
        {
            free_labels.push(m - 1);
        }
    }
    free_labels.sort_unstable();
    let mut accounted: Vec<usize> = Vec::new();
    accounted.extend(free_labels.iter());
    accounted.extend(phi.iter().flat_map(|&(a, b)| [a, b]));
    accounted.extend(sets.pairs.iter().flat_map(|&(a, b)| [a, b]));
    let pinned_labels: Vec<usize> = (1..=n).filter(|m| !accounted.contains(m)).collect();
    ConstraintSystem {
        rank: n,
        sum_zero_pairs: phi,
        difference_zero_pairs: sets.pairs.clone(),
        free_labels,
        pinned_labels,
    }
}

/// Per-label trace coefficient of the density character, in doubled
/// (pre-halving) units, indexed by 1-based coordinate.
fn density_contributions(t: &StandardTableau) -> Vec<Q> {
    let n = t.rank;
    let mut acc = vec![Q::zero(); n];
    for m in 1..=n {
        let sub = t.truncate(m);
        let dual = sub.shape.transpose();
        let lam = |i: usize| q(dual.part(i) as i64);
        let coord = label_coordinate(n, m);
        let idx = coord - 1;
        let step = sub.step_data(m);
        match (step.case, t.lie_type) {
            (StepCase::C1, LieType::A) => {
                acc[idx] = acc[idx] - lam(2);
                for i in sub.column_labels(1) {
                    let c = label_coordinate(n, i);
                    acc[c - 1] = acc[c - 1] + q(1);
                }
            }
            (StepCase::C1, _) => {
                acc[idx] = acc[idx] - lam(2) - lam(3);
            }
            (StepCase::C2, LieType::A) => {
                acc[idx] = acc[idx] - lam(1);
                for i in sub.column_labels(0) {
                    let c = label_coordinate(n, i);
                    acc[c - 1] = acc[c - 1] + q(1);
                }
            }
            (StepCase::C2, LieType::C) => {
                acc[idx] = acc[idx] - lam(1) - q(2);
            }
            (StepCase::C2, _) => {
                acc[idx] = acc[idx] - lam(1) + q(2) - lam(3);
            }
            (StepCase::N1, LieType::C) => {}
            (StepCase::N1, _) => {
                // Each column-2 vertical strictly between the matched
                // labels costs one tied pair of quotient roots.
                let k = step.partner.expect("matched pairs have partners");
                let between = (k + 1..m)
                    .filter(|&j| t.is_vertical(j) && t.cells_of(j)[0].1 == 1)
                    .count() as i64;
                acc[idx] = acc[idx] - q(2) * q(between);
            }
            (StepCase::N2, _) => {}
            (StepCase::N3, _) => {
                acc[idx] = acc[idx] - lam(1);
            }
            (StepCase::Star, _) => {
                acc[idx] = acc[idx] - q(2);
                acc[idx + 2] = acc[idx + 2] - q(1);
            }
        }
    }
    acc
}

/// Weight of the square root of the modulus of the stabilizer determinant
/// acting on the tangent space of the variety: half the accumulated trace
/// coefficients. A representative of its class modulo the constraint
/// directions.
pub fn alpha_weight(t: &StandardTableau) -> Weight {
    density_contributions(t)
        .into_iter()
        .map(|c| c * half(1))
        .collect()
}

/// The inductively corrected companion of `alpha_weight` used for the
/// character-membership statements: unmatched first-column horizontals at
/// label m contribute an extra -m, matched symplectic heads -(m+1),
/// offside horizontals +1, and the exceptional vertical +1 two columns up.
pub fn beta_weight(t: &StandardTableau) -> Weight {
    let n = t.rank;
    let mut acc = density_contributions(t);
    for m in 1..=n {
        let coord = label_coordinate(n, m);
        let idx = coord - 1;
        let step = t.truncate(m).step_data(m);
        match (step.case, t.lie_type) {
            (StepCase::N2, LieType::C) => acc[idx] = acc[idx] - q(m as i64),
            (StepCase::N1, LieType::C) => acc[idx] = acc[idx] - q(m as i64 + 1),
            (StepCase::N3, _) => acc[idx] = acc[idx] + q(1),
            (StepCase::Star, _) => acc[idx + 2] = acc[idx + 2] + q(1),
            _ => {}
        }
    }
    acc.into_iter().map(|c| c * half(1)).collect()
}

/// Dimension gained by the variety at one step of the down-chain, from
/// the case table: the value depends on the step case and the dual
/// partition of the arriving shape (column lengths).
pub fn case_dimension_increment(t: &StandardTableau) -> u32 {
    assert!(t.rank >= 1);
    let n = t.rank;
    let dual = t.shape.transpose();
    let lam = |i: usize| dual.part(i);
    let step = t.step_data(n);
    match (step.case, t.lie_type) {
        (StepCase::C1, _) => lam(2) + lam(3),
        (StepCase::C2, LieType::A) => lam(1),
        (StepCase::C2, LieType::C) => lam(1) + 1,
        (StepCase::C2, _) => lam(1) - 1 + lam(3),
        (StepCase::N1, LieType::C) => {
            // Matched pairs drop together and gain both column heights
            // less one.
            lam(1) + lam(2) - 1
        }
        (StepCase::N1, LieType::B) => lam(1),
        (StepCase::N1, _) => lam(1) - 1,
        (StepCase::N2, LieType::C) => (lam(1) + lam(2)) / 2,
        (StepCase::N2, _) => unreachable!("unmatched horizontals survive only in type C"),
        (StepCase::N3, _) | (StepCase::Star, _) => lam(1),
    }
}

/// Affine family of weights: an offset plus free directions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineWeightFamily {
    pub offset: Weight,
    pub directions: Vec<Weight>,
}

impl AffineWeightFamily {
    pub fn point(w: Weight) -> Self {
        AffineWeightFamily { offset: w, directions: Vec::new() }
    }

    pub fn is_point(&self) -> bool {
        self.directions.is_empty()
    }

    pub fn translate(&self, by: &Weight) -> AffineWeightFamily {
        AffineWeightFamily {
            offset: self.offset.iter().zip(by).map(|(&a, &b)| a + b).collect(),
            directions: self.directions.clone(),
        }
    }

    pub fn member(&self, params: &[Q]) -> Weight {
        assert_eq!(params.len(), self.directions.len());
        let mut w = self.offset.clone();
        for (d, &p) in self.directions.iter().zip(params) {
            for (wi, &di) in w.iter_mut().zip(d) {
                *wi = *wi + p * di;
            }
        }
        w
    }

    /// Members over the half-integer grid [-4, 4] in every parameter,
    /// offset first. Families here have at most two free directions.
    pub fn grid_members(&self) -> Vec<Weight> {
        let steps: Vec<Q> = (-8..=8).map(half).collect();
        let mut out = vec![self.offset.clone()];
        match self.directions.len() {
            0 => {}
            1 => {
                for &s in &steps {
                    out.push(self.member(&[s]));
                }
            }
            2 => {
                for &s in &steps {
                    for &u in &steps {
                        out.push(self.member(&[s, u]));
                    }
                }
            }
            _ => {
                // Axis sweeps for larger families.
                for i in 0..self.directions.len() {
                    for &s in &steps {
                        let mut params = vec![Q::zero(); self.directions.len()];
                        params[i] = s;
                        out.push(self.member(&params));
                    }
                }
            }
        }
        out
    }
}

/// Solves for the members of the density-weight class that extend to
/// genuine characters of the parabolic: constant across each general
/// linear block of the Levi and zero on a classical block. `None` when
/// the extension problem is infeasible.
pub fn solve_extension(t: &StandardTableau) -> Option<AffineWeightFamily> {
    let alpha = alpha_weight(t);
    solve_extension_from(t, &alpha)
}

pub fn solve_extension_from(t: &StandardTableau, base: &Weight) -> Option<AffineWeightFamily> {
    let system = constraint_system(t);
    let dirs = system.directions();
    let blocks = t.levi_blocks();
    // Rows: within each block successive differences vanish; classical
    // block entries vanish outright.
    let mut rows: Vec<Vec<Q>> = Vec::new();
    let mut rhs: Vec<Q> = Vec::new();
    let mut push_row = |coeffs: Vec<(usize, Q)>, target: Q| {
        let mut row = vec![Q::zero(); dirs.len()];
        let mut base_val = Q::zero();
        for &(coord, sign) in &coeffs {
            for (di, d) in dirs.iter().enumerate() {
                row[di] = row[di] + sign * d[coord - 1];
            }
            base_val = base_val + sign * base[coord - 1];
        }
        rows.push(row);
        rhs.push(target - base_val);
    };
    for (bi, block) in blocks.blocks.iter().enumerate() {
        let classical = blocks.classical_last && bi + 1 == blocks.blocks.len();
        if classical {
            for &c in block {
                push_row(vec![(c, q(1))], Q::zero());
            }
        } else {
            for w in block.windows(2) {
                push_row(vec![(w[0], q(1)), (w[1], q(-1))], Q::zero());
            }
        }
    }
    let particular = linalg::solve(&rows, &rhs)?;
    let null = linalg::kernel(&rows);
    let to_weight = |params: &[Q]| -> Weight {
        let mut w = base.clone();
        for (d, &p) in dirs.iter().zip(params) {
            for (wi, &di) in w.iter_mut().zip(d) {
                *wi = *wi + p * di;
            }
        }
        w
    };
    let offset = to_weight(&particular);
    let mut directions: Vec<Weight> = Vec::new();
    for kv in &null {
        let raw: Weight = (0..t.rank)
            .map(|i| {
                dirs.iter()
                    .zip(kv)
                    .fold(Q::zero(), |acc, (d, &p)| acc + p * d[i])
            })
            .collect();
        if raw.iter().any(|x| !x.is_zero()) {
            directions.push(raw);
        }
    }
    Some(AffineWeightFamily { offset, directions })
}

/// The induced infinitesimal-character family: the solved extension
/// translated by the half-sum of positive roots.
pub fn chi_family(t: &StandardTableau) -> Option<AffineWeightFamily> {
    let fam = solve_extension(t)?;
    Some(fam.translate(&rho(t.lie_type, t.rank)))
}

/// Canonical dominant representative of a weight under the Weyl group:
/// sort in type A; sort moduli in types B and C; in type D sort moduli
/// and restore an odd total sign count on the last entry when no entry
/// vanishes.
pub fn weyl_canonical(w: &Weight, lie_type: LieType) -> Weight {
    let mut v = w.clone();
    match lie_type {
        LieType::A => {
            v.sort_unstable_by(|a, b| b.cmp(a));
        }
        LieType::B | LieType::C => {
            for x in v.iter_mut() {
                if *x < Q::zero() {
                    *x = -*x;
                }
            }
            v.sort_unstable_by(|a, b| b.cmp(a));
        }
        LieType::D => {
            let negatives = v.iter().filter(|x| **x < Q::zero()).count();
            let has_zero = v.iter().any(|x| x.is_zero());
            for x in v.iter_mut() {
                if *x < Q::zero() {
                    *x = -*x;
                }
            }
            v.sort_unstable_by(|a, b| b.cmp(a));
            if negatives % 2 == 1 && !has_zero {
                let last = v.len() - 1;
                v[last] = -v[last];
            }
        }
    }
    v
}

/// Exhaustive Weyl orbit for small ranks (testing aid).
pub fn weyl_orbit_brute(w: &Weight, lie_type: LieType) -> Vec<Weight> {
    fn permutations(v: &[Q]) -> Vec<Vec<Q>> {
        if v.len() <= 1 {
            return vec![v.to_vec()];
        }
        let mut out = Vec::new();
        for i in 0..v.len() {
            let mut rest = v.to_vec();
            let x = rest.remove(i);
            for mut tail in permutations(&rest) {
                tail.insert(0, x);
                out.push(tail);
            }
        }
        out
    }
    let mut orbit = Vec::new();
    for p in permutations(w) {
        match lie_type {
            LieType::A => orbit.push(p),
            LieType::B | LieType::C => {
                let n = p.len();
                for mask in 0..(1u32 << n) {
                    let mut s = p.clone();
                    for (i, x) in s.iter_mut().enumerate() {
                        if mask & (1 << i) != 0 {
                            *x = -*x;
                        }
                    }
                    orbit.push(s);
                }
            }
            LieType::D => {
                let n = p.len();
                for mask in 0..(1u32 << n) {
                    if (mask.count_ones() % 2) != 0 {
                        continue;
                    }
                    let mut s = p.clone();
                    for (i, x) in s.iter_mut().enumerate() {
                        if mask & (1 << i) != 0 {
                            *x = -*x;
                        }
                    }
                    orbit.push(s);
                }
            }
        }
    }
    orbit.sort();
    orbit.dedup();
    orbit
}

/// A coordinate interval of the extension family whose end entries move
/// with a common parameter.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DependentInterval {
    /// 1-based inclusive coordinate span, left to right.
    pub span: (usize, usize),
    pub simple: bool,
    pub nonzero: bool,
}

impl DependentInterval {
    pub fn width(&self) -> usize {
        self.span.1 - self.span.0 + 1
    }
}

/// Maximal dependent intervals of the family around `alpha_weight`, with
/// the solved perturbation `gamma_minus_alpha` deciding which are nonzero.
pub fn dependent_intervals(
    system: &ConstraintSystem,
    gamma_minus_alpha: &Weight,
) -> Vec<DependentInterval> {
    let n = system.rank;
    let mut spans: Vec<(usize, usize, ClassRef)> = Vec::new();
    for (i, &(j, phi)) in system.sum_zero_pairs.iter().enumerate() {
        let a = label_coordinate(n, j);
        let b = label_coordinate(n, phi);
        spans.push((a.min(b), a.max(b), ClassRef::Sum(i)));
    }
    for (i, &(k, m)) in system.difference_zero_pairs.iter().enumerate() {
        let a = label_coordinate(n, m);
        let b = label_coordinate(n, k);
        spans.push((a.min(b), a.max(b), ClassRef::Diff(i)));
    }
    for (i, &f) in system.free_labels.iter().enumerate() {
        let c = label_coordinate(n, f);
        spans.push((c, c, ClassRef::Free(i)));
    }
    // Keep only spans not strictly inside another.
    let mut outer: Vec<(usize, usize)> = spans
        .iter()
        .filter(|&&(lo, hi, _)| {
            !spans
                .iter()
                .any(|&(lo2, hi2, _)| (lo2 < lo && hi <= hi2) || (lo2 <= lo && hi < hi2))
        })
        .map(|&(lo, hi, _)| (lo, hi))
        .collect();
    outer.sort_unstable();
    outer.dedup();
    let class_value = |cls: ClassRef| -> Q {
        match cls {
            ClassRef::Sum(i) => {
                let (j, _) = system.sum_zero_pairs[i];
                gamma_minus_alpha[label_coordinate(n, j) - 1]
            }
            ClassRef::Diff(i) => {
                let (_, m) = system.difference_zero_pairs[i];
                gamma_minus_alpha[label_coordinate(n, m) - 1]
            }
            ClassRef::Free(i) => {
                gamma_minus_alpha[label_coordinate(n, system.free_labels[i]) - 1]
            }
            ClassRef::Constant => Q::zero(),
        }
    };
    outer
        .into_iter()
        .map(|(lo, hi)| {
            let width = hi - lo + 1;
            let simple = (0..width / 2).all(|i| {
                system.class_of_coordinate(lo + i) == system.class_of_coordinate(hi - i)
                    && system.class_of_coordinate(lo + i) != ClassRef::Constant
            });
            let nonzero = (lo..=hi).any(|c| {
                let cls = system.class_of_coordinate(c);
                cls != ClassRef::Constant && !class_value(cls).is_zero()
            });
            DependentInterval { span: (lo, hi), simple, nonzero }
        })
        .collect()
}

/// Permutation of coordinates exchanging the halves of each nonzero
/// simple interval, as a mapping array (1-based, identity elsewhere).
pub fn interval_swap(intervals: &[DependentInterval], rank: usize) -> Vec<usize> {
    let mut sigma: Vec<usize> = (0..=rank).collect();
    for iv in intervals {
        if !(iv.simple && iv.nonzero) {
            continue;
        }
        let (lo, hi) = iv.span;
        let w = iv.width();
        let hw = w / 2;
        for i in 0..hw {
            sigma[lo + i] = hi + 1 - hw + i;
            sigma[hi + 1 - hw + i] = lo + i;
        }
    }
    sigma
}

pub fn apply_coordinate_permutation(w: &Weight, sigma: &[usize]) -> Weight {
    (1..=w.len()).map(|i| w[sigma[i] - 1]).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::orbit::OrbitDescriptor;
    use crate::partition::Partition;

    fn wq(vals: &[i64]) -> Weight {
        vals.iter().map(|&v| q(v)).collect()
    }

    fn wh(vals: &[i64]) -> Weight {
        vals.iter().map(|&v| half(v)).collect()
    }

    fn sp8_model_first() -> StandardTableau {
        StandardTableau::from_rows(LieType::C, &[&[1, 1], &[2, 3], &[2, 3], &[4], &[4]]).unwrap()
    }

    #[test]
    fn rho_values() {
        assert_eq!(rho(LieType::C, 4), wq(&[4, 3, 2, 1]));
        assert_eq!(rho(LieType::A, 7), wh(&[6, 4, 2, 0, -2, -4, -6]));
        assert_eq!(rho(LieType::D, 4), wq(&[3, 2, 1, 0]));
        assert_eq!(rho(LieType::B, 3), wh(&[5, 3, 1]));
    }

    #[test]
    fn alpha_weight_model_example() {
        let t = sp8_model_first();
        let alpha = alpha_weight(&t);
        let system = constraint_system(&t);
        // As a functional on the stabilizer torus this is the announced
        // value; the raw accumulation is another representative.
        let announced = vec![half(-3), q(0), q(-3), q(0)];
        assert!(system.same_class(&alpha, &announced));
        assert_eq!(alpha, vec![half(-3), half(-5), half(-1), q(0)]);
    }

    #[test]
    fn alpha_weight_gl6_examples() {
        // Rows (1,4)(2,6)(3)(5): class of ((-2),(0,0),(0,1,1)).
        let t = StandardTableau::from_rows(LieType::A, &[&[1, 4], &[2, 6], &[3], &[5]]).unwrap();
        let alpha = alpha_weight(&t);
        let system = constraint_system(&t);
        let announced = wq(&[-2, 0, 0, 0, 1, 1]);
        assert!(system.same_class(&alpha, &announced));

        // Rows (1,3)(2,5)(4,6): the raw value is the printed one.
        let t = StandardTableau::from_rows(LieType::A, &[&[1, 3], &[2, 5], &[4, 6]]).unwrap();
        assert_eq!(alpha_weight(&t), wh(&[-3, -3, 1, -1, 3, 3]));
    }

    #[test]
    fn constraint_examples() {
        // sp(8) model first tableau: one sum-zero pair (3,2), label 4
        // pinned, label 1 free.
        let t = sp8_model_first();
        let s = constraint_system(&t);
        assert_eq!(s.sum_zero_pairs, vec![(3, 2)]);
        assert!(s.difference_zero_pairs.is_empty());
        assert_eq!(s.free_labels, vec![1]);
        assert_eq!(s.pinned_labels, vec![4]);

        // gl6 rows (1,4)(2,6)(3)(5): labels 1 and 2 pinned.
        let t = StandardTableau::from_rows(LieType::A, &[&[1, 4], &[2, 6], &[3], &[5]]).unwrap();
        let s = constraint_system(&t);
        assert_eq!(s.sum_zero_pairs, vec![(4, 3), (6, 5)]);
        assert_eq!(s.pinned_labels, vec![1, 2]);

        // Zero orbit: everything pinned.
        let zero = OrbitDescriptor::zero(LieType::C, 3);
        let t = &StandardTableau::enumerate(&zero).unwrap()[0];
        let s = constraint_system(t);
        assert_eq!(s.pinned_labels, vec![1, 2, 3]);
    }

    #[test]
    fn extension_goldens() {
        // gl5 columns {1,2,3,5}/{4}: infeasible.
        let t = StandardTableau::from_rows(LieType::A, &[&[1, 4], &[2], &[3], &[5]]).unwrap();
        assert!(solve_extension(&t).is_none());

        // gl6 extension rows (1,4)(2,6)(3)(5): unique solution.
        let t = StandardTableau::from_rows(LieType::A, &[&[1, 4], &[2, 6], &[3], &[5]]).unwrap();
        let fam = solve_extension(&t).unwrap();
        assert!(fam.is_point());
        assert_eq!(fam.offset, wq(&[-1, -1, -1, 1, 1, 1]));

        // gl6 rows (1,3)(2,5)(4,6): unique ((-1,-1),(0,0),(1,1)).
        let t = StandardTableau::from_rows(LieType::A, &[&[1, 3], &[2, 5], &[4, 6]]).unwrap();
        let fam = solve_extension(&t).unwrap();
        assert!(fam.is_point());
        assert_eq!(fam.offset, wq(&[-1, -1, 0, 0, 1, 1]));

        // gl7 rows (1,4)(2,5)(3,6)(7): unique with unit perturbations.
        let t = StandardTableau::from_rows(LieType::A, &[&[1, 4], &[2, 5], &[3, 6], &[7]]).unwrap();
        let fam = solve_extension(&t).unwrap();
        assert!(fam.is_point());
        let chi = chi_family(&t).unwrap();
        assert_eq!(chi.offset, wh(&[3, 1, -1, -3, 2, 0, -2]));

        // sp(8) model: unique gamma = (-3/2)^4, chi canonical (5/2,3/2,1/2,1/2).
        let t = sp8_model_first();
        let fam = solve_extension(&t).unwrap();
        assert!(fam.is_point());
        assert_eq!(fam.offset, wh(&[-3, -3, -3, -3]));
        let chi = chi_family(&t).unwrap();
        assert_eq!(weyl_canonical(&chi.offset, LieType::C), wh(&[5, 3, 1, 1]));
    }

    #[test]
    fn member_consistency() {
        // Every solved member satisfies block constancy when substituted.
        let t = StandardTableau::from_rows(LieType::C, &[&[1, 1], &[2, 2], &[3, 3], &[4], &[4]])
            .unwrap();
        let Some(fam) = solve_extension(&t) else {
            panic!("expected feasible family")
        };
        let blocks = t.levi_blocks();
        let system = constraint_system(&t);
        for w in fam.grid_members().into_iter().take(40) {
            for (bi, block) in blocks.blocks.iter().enumerate() {
                let classical = blocks.classical_last && bi + 1 == blocks.blocks.len();
                for pair in block.windows(2) {
                    assert_eq!(w[pair[0] - 1], w[pair[1] - 1]);
                }
                if classical {
                    for &c in block {
                        assert!(w[c - 1].is_zero());
                    }
                }
            }
            assert!(system.same_class(&w, &alpha_weight(&t)));
        }
    }

    #[test]
    fn weyl_canonical_examples() {
        assert_eq!(weyl_canonical(&wh(&[5, 3, 1, -1]), LieType::C), wh(&[5, 3, 1, 1]));
        let zero = wq(&[0, 0, 0]);
        assert_eq!(weyl_canonical(&zero, LieType::B), zero);
        assert_eq!(weyl_canonical(&wq(&[1, -2, 0, -3]), LieType::D), wq(&[3, 2, 1, 0]));
        // Odd sign count with no zero entry keeps one negative in type D.
        assert_eq!(weyl_canonical(&wq(&[1, -2, 4, 3]), LieType::D), wq(&[4, 3, 2, -1]));
        assert_eq!(weyl_canonical(&wq(&[1, -2, 4, -3]), LieType::D), wq(&[4, 3, 2, 1]));
    }

    #[test]
    fn weyl_canonical_constant_on_orbits() {
        for lt in [LieType::A, LieType::B, LieType::C, LieType::D] {
            let base = vec![q(2), q(-1), q(0), q(1)];
            let canon = weyl_canonical(&base, lt);
            for w in weyl_orbit_brute(&base, lt) {
                assert_eq!(weyl_canonical(&w, lt), canon);
            }
            assert_eq!(weyl_canonical(&canon, lt), canon, "idempotent");
        }
    }

    #[test]
    fn dependent_interval_example() {
        // gl7 rows (1,4)(2,5)(3,6)(7): one simple interval spanning
        // coordinates 2..7, swap permutation pairing (2,5),(3,6),(4,7).
        let t = StandardTableau::from_rows(LieType::A, &[&[1, 4], &[2, 5], &[3, 6], &[7]]).unwrap();
        let system = constraint_system(&t);
        let fam = solve_extension(&t).unwrap();
        let alpha = alpha_weight(&t);
        let diff: Weight = fam.offset.iter().zip(&alpha).map(|(&a, &b)| a - b).collect();
        let ivs = dependent_intervals(&system, &diff);
        assert_eq!(ivs.len(), 1);
        assert_eq!(ivs[0].span, (2, 7));
        assert!(ivs[0].simple && ivs[0].nonzero);
        let sigma = interval_swap(&ivs, t.rank);
        // w_gamma + rho is the swap of w_alpha + rho.
        let rho7 = rho(LieType::A, 7);
        let a_rho: Weight = alpha.iter().zip(&rho7).map(|(&a, &b)| a + b).collect();
        let g_rho: Weight = fam.offset.iter().zip(&rho7).map(|(&a, &b)| a + b).collect();
        assert_eq!(apply_coordinate_permutation(&a_rho, &sigma), g_rho);

        // No parameters, no intervals.
        let zero = OrbitDescriptor::zero(LieType::A, 4);
        let t = &StandardTableau::enumerate(&zero).unwrap()[0];
        let system = constraint_system(t);
        let ivs = dependent_intervals(&system, &vec![Q::zero(); 4]);
        assert!(ivs.is_empty());
    }

    #[test]
    fn beta_weight_examples() {
        // Only plain column steps: beta equals alpha.
        let t = StandardTableau::from_rows(LieType::A, &[&[1, 3], &[2, 5], &[4, 6]]).unwrap();
        assert_eq!(beta_weight(&t), alpha_weight(&t));

        // sp(8) model first tableau: corrected at the unmatched horizontal.
        let t = sp8_model_first();
        let beta = beta_weight(&t);
        let alpha = alpha_weight(&t);
        assert_eq!(beta[3], alpha[3] - half(1));
        assert_eq!(&beta[..3], &alpha[..3]);
        // The corrected weight lands on the canonical character.
        let b_rho: Weight =
            beta.iter().zip(&rho(LieType::C, 4)).map(|(&a, &b)| a + b).collect();
        assert_eq!(weyl_canonical(&b_rho, LieType::C), wh(&[5, 3, 1, 1]));
    }

    #[test]
    fn minimal_orbit_rank2_chi() {
        let o = OrbitDescriptor::new(LieType::C, 2, Partition::new(vec![2, 1, 1]), None).unwrap();
        let ts = StandardTableau::enumerate(&o).unwrap();
        assert_eq!(ts.len(), 1);
        let chi = chi_family(&ts[0]).unwrap();
        assert!(chi.is_point());
        assert_eq!(weyl_canonical(&chi.offset, LieType::C), wh(&[3, 1]));
        let beta = beta_weight(&ts[0]);
        let b_rho: Weight =
            beta.iter().zip(&rho(LieType::C, 2)).map(|(&a, &b)| a + b).collect();
        assert_eq!(weyl_canonical(&b_rho, LieType::C), wh(&[3, 1]));
    }
}
