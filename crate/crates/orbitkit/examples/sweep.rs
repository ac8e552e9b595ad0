use orbitkit::harness::{report_text, verify_exhaustion, verify_membership};
use orbitkit::orbit::LieType;

fn main() {
    let args: Vec<String> = std::env::args().collect();
    let max: usize = args.get(1).and_then(|s| s.parse().ok()).unwrap_or(6);
    let types = [LieType::A, LieType::B, LieType::C, LieType::D];
    let r = verify_exhaustion(&types, max);
    print!("{}", report_text(&r));
    let r2 = verify_membership(&types, max, false);
    print!("{}", report_text(&r2));
    let fails: Vec<_> = r.verdicts.iter().chain(r2.verdicts.iter()).filter(|v| !v.pass).collect();
    for f in &fails {
        println!("FAILDETAIL {} :: {}", f.name, f.detail);
    }
}
