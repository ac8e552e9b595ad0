use orbitkit::orbit::{LieType, OrbitDescriptor};
use orbitkit::partition::Partition;
use orbitkit::tableau::StandardTableau;
use orbitkit::weight::{alpha_weight, chi_family, constraint_system, solve_extension, weyl_canonical};

fn main() {
    let args: Vec<String> = std::env::args().collect();
    let lt = LieType::parse(&args[1]).unwrap();
    let rank: usize = args[2].parse().unwrap();
    let p = Partition::from_csv(&args[3]).unwrap();
    let o = OrbitDescriptor::new(lt, rank, p, None).unwrap();
    println!("orbit {o} flags {:?} pi1 {}", o.flags(), o.pi1_order());
    for (i, t) in StandardTableau::enumerate(&o).unwrap().iter().enumerate() {
        println!("--- variety {i}: {}", t.to_text());
        println!("    alpha {:?}", alpha_weight(t).iter().map(|x| x.to_string()).collect::<Vec<_>>());
        println!("    blocks {:?} system {:?}", t.levi_blocks(), constraint_system(t));
        match solve_extension(t) {
            None => println!("    INFEASIBLE"),
            Some(fam) => {
                println!("    gamma offset {:?} dirs {}", fam.offset.iter().map(|x| x.to_string()).collect::<Vec<_>>(), fam.directions.len());
                let chi = chi_family(t).unwrap();
                println!("    chi canonical {:?}", weyl_canonical(&chi.offset, lt).iter().map(|x| x.to_string()).collect::<Vec<_>>());
            }
        }
    }
}
