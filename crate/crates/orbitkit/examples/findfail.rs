use orbitkit::orbit::{spherical_orbits, LieType, Numeral};
use orbitkit::tableau::StandardTableau;

fn main() {
    for lt in [LieType::A, LieType::B, LieType::C, LieType::D] {
        for rank in lt.min_rank()..=6 {
            for o in spherical_orbits(lt, rank) {
                if o.numeral == Some(Numeral::II) {
                    continue;
                }
                for t in StandardTableau::enumerate(&o).unwrap() {
                    let r = std::panic::catch_unwind(|| {
                        let _ = orbitkit::weight::solve_extension(&t);
                    });
                    if r.is_err() {
                        println!("FAILS: {:?} (orbit {o})", t);
                        return;
                    }
                }
            }
        }
    }
    println!("all fine");
}
