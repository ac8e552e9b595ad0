use orbitkit::harness::orbit_record;
use orbitkit::orbit::{LieType, OrbitDescriptor};
use orbitkit::partition::Partition;

fn main() {
    let args: Vec<String> = std::env::args().collect();
    let lt = LieType::parse(&args[1]).unwrap();
    let rank: usize = args[2].parse().unwrap();
    let p = Partition::from_csv(&args[3]).unwrap();
    let o = OrbitDescriptor::new(lt, rank, p, None).unwrap();
    let rec = orbit_record(&o);
    println!("characters: {:?}", rec.pruned_set.iter().map(|c| c.source.to_csv()).collect::<Vec<_>>());
    for v in &rec.varieties {
        if !v.strays.is_empty() && v.free_directions == 0 && !v.exceptional {
            println!("STRAY variety {}: {}", v.index, v.tableau);
            println!("   chi {:?}", v.chi_offset);
            println!("   strays {:?}", v.strays);
        }
    }
}
