use orbitkit::oracle::*;
use orbitkit::orbit::LieType;
use orbitkit::partition::Partition;
use orbitkit::tableau::StandardTableau;

fn main() {
    let t = StandardTableau::from_rows(LieType::D, &[&[1, 3, 3], &[1, 4], &[2, 4], &[2]]).unwrap();
    let alg = MatrixAlgebra::realize(LieType::D, 4);
    let f = basepoint_matrix(&t, &alg);
    let p = Partition::new(vec![3, 2, 2, 1]);
    let dim_b = alg.borel_basis().len();
    let want = 6usize; // dim orbit 12 / 2
    for (root, m) in alg.roots() {
        if root.iter().find(|&&x| x != 0).is_some_and(|&x| x <= 0) {
            continue;
        }
        let g = mat_add(&f, m);
        let ok_profile = rank_profile_check(&g, &p);
        if !ok_profile {
            continue;
        }
        let bg = centralizer_dim(SubalgebraSelector::Borel, &t, &g, &alg);
        if dim_b - bg == want {
            println!("root {root:?} restores density and profile");
        }
    }
    println!("done");
}
