fn main() {
    use std::time::Instant;
    let t = Instant::now();
    let cat = latkit::enumerate::rl_catalog(5).unwrap();
    println!("RLs over bases <=5: {} [{:?}]", cat.algebras.len(), t.elapsed());
    // per-base breakdown at size 5
    for base in latkit::enumerate::enumerate_pointed(5).unwrap() {
        let t = Instant::now();
        let n = latkit::rl::enumerate_rls(&base).unwrap().len();
        println!("  base {:?}: {} RLs [{:?}]", base, n, t.elapsed());
    }
}
