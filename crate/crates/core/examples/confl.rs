use qhopf_core::algebra::{Config, Engine, Level};
use std::time::Instant;

fn main() {
    for (name, level) in [("core", Level::Core), ("localized", Level::Localized), ("braided(2)", Level::Braided(2))] {
        let mut cfg = Config::default();
        cfg.level = level;
        let eng = Engine::new(cfg).unwrap();
        let t0 = Instant::now();
        let rep = eng.check_confluence(3).unwrap();
        println!("{}: {} overlaps in {:?}, confluent = {}", name, rep.overlaps_checked, t0.elapsed(), rep.is_confluent());
        for f in rep.failures.iter().take(5) {
            println!("  FAIL: {}", f);
        }
    }
}
