use orbitkit::oracle::{basepoint_matrix, centralizer_dim, mat_add, MatrixAlgebra, SubalgebraSelector};
use orbitkit::orbit::{spherical_orbits, LieType, Numeral};
use orbitkit::tableau::StandardTableau;
use orbitkit::weight::label_coordinate;

fn main() {
    for lt in [LieType::A, LieType::B, LieType::C, LieType::D] {
        for rank in lt.min_rank()..=5 {
            let alg = MatrixAlgebra::realize(lt, rank);
            let dim_b = alg.borel_basis().len();
            for o in spherical_orbits(lt, rank) {
                if o.numeral == Some(Numeral::II) {
                    continue;
                }
                for t in StandardTableau::enumerate(&o).unwrap() {
                    let f = basepoint_matrix(&t, &alg);
                    let bf = centralizer_dim(SubalgebraSelector::Borel, &t, &f, &alg);
                    let want = (o.dim() / 2) as usize;
                    let pairs = t.horizontal_sets().pairs;
                    let deficit = want as i64 - (dim_b - bf) as i64;
                    if deficit != 0 {
                        // Try the pair-augmented representative.
                        let mut g = f.clone();
                        if lt == LieType::C {
                            for &(k, _) in &pairs {
                                let mut root = vec![0i64; rank];
                                root[label_coordinate(rank, k) - 1] = 2;
                                g = mat_add(&g, alg.root_vector(&root));
                            }
                        }
                        let bg = centralizer_dim(SubalgebraSelector::Borel, &t, &g, &alg);
                        println!(
                            "{t:?}: deficit {deficit} (pairs {}), augmented deficit {}",
                            pairs.len(),
                            want as i64 - (dim_b - bg) as i64
                        );
                    }
                }
            }
        }
    }
    println!("done");
}
