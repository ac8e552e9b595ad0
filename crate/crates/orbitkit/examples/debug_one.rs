use orbitkit::linalg;
use orbitkit::oracle::{basepoint_matrix, stabilizer_torus, torus_trace, MatrixAlgebra};
use orbitkit::orbit::LieType;
use orbitkit::tableau::StandardTableau;
use orbitkit::weight::{alpha_weight, constraint_system};

fn main() {
    // B5 variety: 0 3 3 / 1 5 / 1 5 / 2 / 2 / 4 / 4
    let t = StandardTableau::from_rows(
        LieType::B,
        &[&[0, 3, 3], &[1, 5], &[1, 5], &[2], &[2], &[4], &[4]],
    )
    .unwrap();
    let alg = MatrixAlgebra::realize(LieType::B, 5);
    let f = basepoint_matrix(&t, &alg);
    let torus = stabilizer_torus(&f, &alg);
    println!("matrix torus basis:");
    for v in &torus {
        println!("  {:?}", v.iter().map(|x| x.to_string()).collect::<Vec<_>>());
    }
    let w = torus_trace(&t, &alg);
    let a = alpha_weight(&t);
    println!("oracle  {:?}", w.iter().map(|x| x.to_string()).collect::<Vec<_>>());
    println!("combin  {:?}", a.iter().map(|x| x.to_string()).collect::<Vec<_>>());
    for v in &torus {
        println!(
            "  pairing: oracle {} vs comb {}",
            linalg::dot(&w, v),
            linalg::dot(&a, v)
        );
    }
    let system = constraint_system(&t);
    println!("system {system:?}");
}
