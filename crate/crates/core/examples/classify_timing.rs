//! Times one classification run: `cargo run --release --example classify_timing N R RHO [a b c]`.

use std::time::Duration;

use sgsr::search::{classify, Budget, Mode, Source, Target};

fn main() {
    let args: Vec<i64> = std::env::args().skip(1).map(|s| s.parse().unwrap()).collect();
    let (n, r, rho) = (args[0] as usize, args[1] as usize, args[2]);
    let mode = if args.len() == 6 {
        Mode::Constrained(Target {
            a: Some(args[3]),
            b: Some(args[4]),
            c: Some(args[5]),
        })
    } else {
        Mode::Full
    };
    let budget = Budget {
        max_nodes: None,
        max_time: Some(Duration::from_secs(1200)),
    };
    let rep = classify(n, r, rho, &Source::Generated, mode, &budget).unwrap();
    println!(
        "n={n} underlying={} factors={} signings={} nodes={} incomplete={:?} elapsed={:.2?}",
        rep.underlying_count, rep.factor_count, rep.signing_count, rep.node_count, rep.incomplete, rep.elapsed
    );
    for s in &rep.survivors {
        println!("{} {:?}\n{}", s.params, s.class, sgsr::format::write_sg(&s.graph));
    }
}
