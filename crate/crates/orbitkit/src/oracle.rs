//! Exact matrix realizations of the classical Lie algebras, used as an
//! independent check on the combinatorial layer: basepoint matrices, rank
//! profiles, centralizer dimensions, and the stabilizer-torus trace.
//!
//! Bilinear forms are taken anti-diagonal so that the upper-triangular
//! matrices in each realization form a Borel subalgebra.

use crate::linalg::{self, Mat};
use crate::num::{half, q, Q};
use crate::orbit::LieType;
use crate::partition::Partition;
use crate::tableau::StandardTableau;
use crate::weight::{label_coordinate, Weight};
use num_traits::Zero;

/// A root in e-coordinates: integer coefficient vector of length rank.
pub type Root = Vec<i64>;

pub struct MatrixAlgebra {
    pub lie_type: LieType,
    pub rank: usize,
    /// Ambient matrix size.
    pub dim: usize,
    roots: Vec<(Root, Mat)>,
    form: Option<Mat>,
}

fn zero_mat(n: usize) -> Mat {
    vec![vec![Q::zero(); n]; n]
}

fn unit(nrows: usize, r: usize, c: usize) -> Mat {
    let mut m = zero_mat(nrows);
    m[r][c] = q(1);
    m
}

pub fn mat_add(a: &Mat, b: &Mat) -> Mat {
    a.iter()
        .zip(b)
        .map(|(ra, rb)| ra.iter().zip(rb).map(|(&x, &y)| x + y).collect())
        .collect()
}

pub fn mat_scale(a: &Mat, s: Q) -> Mat {
    a.iter().map(|row| row.iter().map(|&x| x * s).collect()).collect()
}

pub fn mat_mul(a: &Mat, b: &Mat) -> Mat {
    let n = a.len();
    let mut out = zero_mat(n);
    for i in 0..n {
        for k in 0..n {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..n {
                out[i][j] = out[i][j] + a[i][k] * b[k][j];
            }
        }
    }
    out
}

pub fn bracket(a: &Mat, b: &Mat) -> Mat {
    let ab = mat_mul(a, b);
    let ba = mat_mul(b, a);
    ab.iter()
        .zip(&ba)
        .map(|(ra, rb)| ra.iter().zip(rb).map(|(&x, &y)| x - y).collect())
        .collect()
}

pub fn mat_rank(m: &Mat) -> usize {
    linalg::rank(m)
}

pub fn is_zero_mat(m: &Mat) -> bool {
    m.iter().flatten().all(|x| x.is_zero())
}

impl MatrixAlgebra {
    /// Builds the standard realization: full matrices in type A, the
    /// isometry algebra of an anti-diagonal form otherwise. Root vectors
    /// are derived from entry weights, so each is exact by construction.
    pub fn realize(lie_type: LieType, rank: usize) -> MatrixAlgebra {
        let n = rank;
        let dim = match lie_type {
            LieType::A => n,
            LieType::B => 2 * n + 1,
            LieType::C | LieType::D => 2 * n,
        };
        // e-weight of each row/column index of the ambient space.
        let row_weight = |r: usize| -> Root {
            let mut w = vec![0i64; n];
            if r < n {
                w[r] = 1;
            } else if dim - 1 - r < n && r >= dim - n {
                w[dim - 1 - r] = -1;
            }
            w
        };
        let form = match lie_type {
            LieType::A => None,
            LieType::B | LieType::D => {
                let mut j = zero_mat(dim);
                for i in 0..dim {
                    j[i][dim - 1 - i] = q(1);
                }
                Some(j)
            }
            LieType::C => {
                let mut j = zero_mat(dim);
                for i in 0..dim {
                    j[i][dim - 1 - i] = if i < n { q(1) } else { q(-1) };
                }
                Some(j)
            }
        };
        let mut root_list: Vec<Root> = Vec::new();
        for i in 0..n {
            for jx in 0..n {
                if i == jx {
                    continue;
                }
                let mut r = vec![0i64; n];
                r[i] = 1;
                r[jx] = -1;
                root_list.push(r);
            }
        }
        match lie_type {
            LieType::A => {}
            LieType::B => {
                for i in 0..n {
                    for s in [1i64, -1] {
                        let mut r = vec![0i64; n];
                        r[i] = s;
                        root_list.push(r);
                    }
                }
                for i in 0..n {
                    for jx in i + 1..n {
                        for s in [1i64, -1] {
                            let mut r = vec![0i64; n];
                            r[i] = s;
                            r[jx] = s;
                            root_list.push(r);
                        }
                    }
                }
            }
            LieType::C => {
                for i in 0..n {
                    for s in [2i64, -2] {
                        let mut r = vec![0i64; n];
                        r[i] = s;
                        root_list.push(r);
                    }
                }
                for i in 0..n {
                    for jx in i + 1..n {
                        for s in [1i64, -1] {
                            let mut r = vec![0i64; n];
                            r[i] = s;
                            r[jx] = s;
                            root_list.push(r);
                        }
                    }
                }
            }
            LieType::D => {
                for i in 0..n {
                    for jx in i + 1..n {
                        for s in [1i64, -1] {
                            let mut r = vec![0i64; n];
                            r[i] = s;
                            r[jx] = s;
                            root_list.push(r);
                        }
                    }
                }
            }
        }
        let mut roots = Vec::new();
        for root in root_list {
            // Ambient entries carrying this weight.
            let mut slots: Vec<(usize, usize)> = Vec::new();
            for r in 0..dim {
                for c in 0..dim {
                    if r == c {
                        continue;
                    }
                    let wr = row_weight(r);
                    let wc = row_weight(c);
                    let diff: Root = wr.iter().zip(&wc).map(|(&a, &b)| a - b).collect();
                    if diff == root {
                        slots.push((r, c));
                    }
                }
            }
            let vec_mat = match &form {
                None => {
                    assert_eq!(slots.len(), 1);
                    unit(dim, slots[0].0, slots[0].1)
                }
                Some(j) => {
                    // Solve X^T J + J X = 0 on the span of the slots.
                    let mats: Vec<Mat> =
                        slots.iter().map(|&(r, c)| unit(dim, r, c)).collect();
                    let mut rows: Vec<Vec<Q>> = Vec::new();
                    for r in 0..dim {
                        for c in 0..dim {
                            let row: Vec<Q> = mats
                                .iter()
                                .map(|m| {
                                    let t = mat_add(
                                        &transpose_mul(m, j),
                                        &mat_mul(j, m),
                                    );
                                    t[r][c]
                                })
                                .collect();
                            if row.iter().any(|x| !x.is_zero()) {
                                rows.push(row);
                            }
                        }
                    }
                    let kernel = if rows.is_empty() {
                        // The slot span already sits inside the algebra.
                        (0..mats.len())
                            .map(|i| {
                                let mut v = vec![Q::zero(); mats.len()];
                                v[i] = q(1);
                                v
                            })
                            .collect()
                    } else {
                        linalg::kernel(&rows)
                    };
                    assert_eq!(kernel.len(), 1, "root space must be a line");
                    let coeffs = &kernel[0];
                    // Normalize the leading coefficient to +1.
                    let lead = coeffs.iter().find(|x| !x.is_zero()).copied().unwrap();
                    let mut m = zero_mat(dim);
                    for (cf, em) in coeffs.iter().zip(&mats) {
                        m = mat_add(&m, &mat_scale(em, *cf / lead));
                    }
                    m
                }
            };
            roots.push((root, vec_mat));
        }
        MatrixAlgebra { lie_type, rank, dim, roots, form }
    }

    pub fn root_vector(&self, root: &[i64]) -> &Mat {
        &self
            .roots
            .iter()
            .find(|(r, _)| r == root)
            .unwrap_or_else(|| panic!("no root {root:?} in {:?}{}", self.lie_type, self.rank))
            .1
    }

    pub fn roots(&self) -> impl Iterator<Item = &(Root, Mat)> {
        self.roots.iter()
    }

    pub fn positive_roots(&self) -> Vec<&Root> {
        self.roots
            .iter()
            .map(|(r, _)| r)
            .filter(|r| r.iter().find(|&&x| x != 0).is_some_and(|&x| x > 0))
            .collect()
    }

    /// Torus generator dual to the i-th coordinate (1-based).
    pub fn torus_generator(&self, i: usize) -> Mat {
        let mut m = zero_mat(self.dim);
        m[i - 1][i - 1] = q(1);
        if self.lie_type != LieType::A {
            m[self.dim - i][self.dim - i] = q(-1);
        }
        m
    }

    pub fn torus_element(&self, coords: &[Q]) -> Mat {
        let mut m = zero_mat(self.dim);
        for (i, &a) in coords.iter().enumerate() {
            m = mat_add(&m, &mat_scale(&self.torus_generator(i + 1), a));
        }
        m
    }

    pub fn contains(&self, x: &Mat) -> bool {
        match &self.form {
            None => true,
            Some(j) => is_zero_mat(&mat_add(&transpose_mul(x, j), &mat_mul(j, x))),
        }
    }

    /// Basis of the Borel (positive root vectors and the torus).
    pub fn borel_basis(&self) -> Vec<Mat> {
        let mut basis: Vec<Mat> = self
            .roots
            .iter()
            .filter(|(r, _)| r.iter().find(|&&x| x != 0).is_some_and(|&x| x > 0))
            .map(|(_, m)| m.clone())
            .collect();
        for i in 1..=self.rank {
            basis.push(self.torus_generator(i));
        }
        basis
    }

    /// Basis of the parabolic containing the Borel whose Levi is read off
    /// a tableau's stabilizer data.
    pub fn parabolic_basis(&self, t: &StandardTableau) -> Vec<Mat> {
        let tau = t.tau_invariant();
        let mut basis = self.borel_basis();
        for (root, m) in &self.roots {
            let first = root.iter().find(|&&x| x != 0);
            if !first.is_some_and(|&x| x < 0) {
                continue;
            }
            let pos: Root = root.iter().map(|&x| -x).collect();
            if self.root_in_levi(&pos, &tau.adjacent, tau.classical) {
                basis.push(m.clone());
            }
        }
        basis
    }

    fn root_in_levi(&self, root: &[i64], adjacent: &[bool], classical: bool) -> bool {
        // A positive root lies in the Levi iff it is a sum of marked
        // simple roots: for e_i - e_j all marks i..j-1; anything touching
        // the classical tail needs the classical mark plus marks down to
        // the last coordinate.
        let support: Vec<usize> = (0..root.len()).filter(|&i| root[i] != 0).collect();
        let has_negative = root.iter().any(|&x| x < 0);
        if has_negative {
            // e_i - e_j: needs adjacent marks spanning [i, j).
            let i = support[0];
            let j = support[support.len() - 1];
            (i..j).all(|k| adjacent[k])
        } else {
            // Short/long/sum roots engage the classical tail.
            if !classical {
                return false;
            }
            let i = support[0];
            (i..self.rank - 1).all(|k| adjacent[k]) || i == self.rank - 1
        }
    }
}

fn transpose_mul(x: &Mat, j: &Mat) -> Mat {
    // x^T * j
    let n = x.len();
    let mut out = zero_mat(n);
    for i in 0..n {
        for k in 0..n {
            if x[k][i].is_zero() {
                continue;
            }
            for c in 0..n {
                out[i][c] = out[i][c] + x[k][i] * j[k][c];
            }
        }
    }
    out
}

/// Basepoint matrix of a tableau: the projected column component plus the
/// horizontal-domino roots, in global coordinates. Pair partners carry no
/// term of their own.
pub fn basepoint_matrix(t: &StandardTableau, alg: &MatrixAlgebra) -> Mat {
    assert_eq!(alg.lie_type, t.lie_type);
    assert_eq!(alg.rank, t.rank);
    let n = t.rank;
    let mut f = zero_mat(alg.dim);
    let add_root = |root: Vec<i64>, f: &mut Mat| {
        *f = mat_add(f, alg.root_vector(&root));
    };
    let e = |i: usize, s: i64| -> Vec<i64> {
        let mut v = vec![0i64; n];
        v[i - 1] = s;
        v
    };
    let e2 = |i: usize, si: i64, j: usize, sj: i64| -> Vec<i64> {
        let mut v = vec![0i64; n];
        v[i - 1] = si;
        v[j - 1] = sj;
        v
    };
    // Column component: chained injections in type A, the two-column
    // injection for dominoes.
    let phi = if t.is_young() { t.full_injection() } else { t.column_injection() };
    for (k, image) in phi {
        add_root(
            e2(label_coordinate(n, k), 1, label_coordinate(n, image), -1),
            &mut f,
        );
    }
    if t.is_young() {
        return f;
    }
    let sets = t.horizontal_sets();
    for (k, m) in sets.pairs {
        add_root(
            e2(label_coordinate(n, m), 1, label_coordinate(n, k), 1),
            &mut f,
        );
    }
    for m in sets.unpaired {
        debug_assert_eq!(t.lie_type, LieType::C);
        add_root(e(label_coordinate(n, m), 2), &mut f);
    }
    for m in sets.offside {
        let c = label_coordinate(n, m);
        // The first label has no lower neighbour to tie to; only the
        // extra root survives (type B, over the zero square).
        if m >= 2 {
            add_root(e2(c, 1, c + 1, -1), &mut f);
        }
        match t.lie_type {
            LieType::B => add_root(e(c, 1), &mut f),
            LieType::D => {
                assert!(m >= 2, "offside horizontals start at label 2 in type D");
                add_root(e2(c, 1, c + 1, 1), &mut f);
            }
            _ => unreachable!("offside horizontals only in B and D"),
        }
    }
    if let Some(s) = t.star_label() {
        add_root(e(label_coordinate(n, s), 1), &mut f);
    }
    f
}

/// Representative with a dense Borel orbit: the basepoint plus, in type
/// C, one long root per matched pair (each matched pair costs the plain
/// basepoint exactly one orbit dimension).
pub fn dense_representative(t: &StandardTableau, alg: &MatrixAlgebra) -> Mat {
    let mut f = basepoint_matrix(t, alg);
    if t.lie_type == LieType::C {
        for (k, _) in t.horizontal_sets().pairs {
            let mut root = vec![0i64; t.rank];
            root[label_coordinate(t.rank, k) - 1] = 2;
            f = mat_add(&f, alg.root_vector(&root));
        }
    }
    f
}

/// Verifies that the power ranks of `f` cut out exactly the claimed
/// partition: rank f^k = |p| - (sum of the first k transposed parts).
pub fn rank_profile_check(f: &Mat, p: &Partition) -> bool {
    let total = p.total() as usize;
    if f.len() != total {
        return false;
    }
    let t = p.transpose();
    let mut power = f.clone();
    let mut acc = 0u32;
    for k in 1..=t.len() + 1 {
        acc += t.part(k);
        let expected = total as i64 - acc as i64;
        if mat_rank(&power) as i64 != expected.max(0) {
            return false;
        }
        if expected <= 0 {
            break;
        }
        power = mat_mul(&power, f);
    }
    true
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SubalgebraSelector {
    Borel,
    Parabolic,
    Torus,
}

/// Dimension of the centralizer of `f` inside the selected subalgebra,
/// by exact kernel computation.
pub fn centralizer_dim(
    selector: SubalgebraSelector,
    t: &StandardTableau,
    f: &Mat,
    alg: &MatrixAlgebra,
) -> usize {
    let basis = match selector {
        SubalgebraSelector::Borel => alg.borel_basis(),
        SubalgebraSelector::Parabolic => alg.parabolic_basis(t),
        SubalgebraSelector::Torus => {
            (1..=alg.rank).map(|i| alg.torus_generator(i)).collect()
        }
    };
    basis.len() - ad_rank(&basis, f)
}

fn ad_rank(basis: &[Mat], f: &Mat) -> usize {
    let dim = f.len();
    let rows: Vec<Vec<Q>> = (0..dim * dim)
        .map(|rc| {
            basis
                .iter()
                .map(|b| {
                    let br = bracket(b, f);
                    br[rc / dim][rc % dim]
                })
                .collect()
        })
        .filter(|row: &Vec<Q>| row.iter().any(|x| !x.is_zero()))
        .collect();
    linalg::rank(&rows)
}

/// Basis of the stabilizer torus of `f`: coordinate vectors `a` with
/// [torus(a), f] = 0.
pub fn stabilizer_torus(f: &Mat, alg: &MatrixAlgebra) -> Vec<Vec<Q>> {
    let n = alg.rank;
    let dim = alg.dim;
    let mut rows: Vec<Vec<Q>> = Vec::new();
    let gens: Vec<Mat> = (1..=n).map(|i| alg.torus_generator(i)).collect();
    let images: Vec<Mat> = gens.iter().map(|g| bracket(g, f)).collect();
    for r in 0..dim {
        for c in 0..dim {
            let row: Vec<Q> = images.iter().map(|im| im[r][c]).collect();
            if row.iter().any(|x| !x.is_zero()) {
                rows.push(row);
            }
        }
    }
    linalg::kernel_with_cols(&rows, n)
}

/// Trace functional of the stabilizer torus acting on the quotient of the
/// stabilizing parabolic by its centralizer of `f`, returned as half its
/// negative: a representative of the density-character weight class.
pub fn torus_trace(t: &StandardTableau, alg: &MatrixAlgebra) -> Weight {
    let f = basepoint_matrix(t, alg);
    let torus = stabilizer_torus(&f, alg);
    let par = alg.parabolic_basis(t);
    // Centralizer of f in the parabolic, as matrices.
    let dim = alg.dim;
    let rows: Vec<Vec<Q>> = (0..dim * dim)
        .map(|rc| {
            par.iter()
                .map(|b| {
                    let br = bracket(b, &f);
                    br[rc / dim][rc % dim]
                })
                .collect()
        })
        .filter(|row: &Vec<Q>| row.iter().any(|x| !x.is_zero()))
        .collect();
    let kernel = linalg::kernel_with_cols(&rows, par.len());
    let q_f: Vec<Mat> = kernel
        .iter()
        .map(|coeffs| {
            let mut m = zero_mat(dim);
            for (cf, b) in coeffs.iter().zip(&par) {
                if !cf.is_zero() {
                    m = mat_add(&m, &mat_scale(b, *cf));
                }
            }
            m
        })
        .collect();
    // Flattened coordinates of the centralizer basis, for re-expression.
    let flat: Vec<Vec<Q>> = q_f.iter().map(|m| m.iter().flatten().copied().collect()).collect();
    let mut traces: Vec<Q> = Vec::new();
    for tv in &torus {
        let a = alg.torus_element(tv);
        // Trace on the parabolic: sum of root values over parabolic roots.
        let mut tr_par = Q::zero();
        let tau = t.tau_invariant();
        for (root, _) in alg.roots() {
            let first_sign = root.iter().find(|&&x| x != 0).copied().unwrap_or(0);
            let positive = first_sign > 0;
            let in_levi = {
                let pos: Root =
                    if positive { root.clone() } else { root.iter().map(|&x| -x).collect() };
                alg.root_in_levi(&pos, &tau.adjacent, tau.classical)
            };
            if positive || in_levi {
                let val = root
                    .iter()
                    .zip(tv)
                    .fold(Q::zero(), |acc, (&ri, &ai)| acc + q(ri) * ai);
                tr_par = tr_par + val;
            }
        }
        // Trace on the centralizer: express ad(a) in the kernel basis.
        let mut tr_cent = Q::zero();
        for (i, v) in q_f.iter().enumerate() {
            let image = bracket(&a, v);
            let image_flat: Vec<Q> = image.iter().flatten().copied().collect();
            let coords = linalg::coordinates_in_span(&flat, &image_flat)
                .expect("stabilizer torus preserves the centralizer");
            tr_cent = tr_cent + coords[i];
        }
        traces.push(tr_par - tr_cent);
    }
    // Representative weight w with <w, t_j> = -trace_j / 2.
    let n = alg.rank;
    if torus.is_empty() {
        return vec![Q::zero(); n];
    }
    let rows: Vec<Vec<Q>> = torus.clone();
    let rhs: Vec<Q> = traces.iter().map(|&tr| -tr * half(1)).collect();
    linalg::solve(&rows, &rhs).expect("trace functional is consistent")[..n].to_vec()
}
