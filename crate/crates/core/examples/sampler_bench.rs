use std::time::Instant;

use lorentzian::gadgets::build_stability_gadget;
use lorentzian::graph::Graph;
use lorentzian::oracles::{hyperbolicity_sampler, stability_sampler, stability_sampler_composed};
use lorentzian::rat_int;

fn main() {
    let gadget = build_stability_gadget(&Graph::path(3), 2, None).unwrap();
    println!("p_tilde terms: {}", gadget.p_tilde.num_terms());

    let t = Instant::now();
    let r = stability_sampler(&gadget.p_tilde, 10_000, 12345).unwrap();
    println!(
        "generic sampler 10k trials: {:?} verdict {:?}",
        t.elapsed(),
        r.verdict
    );

    let t = Instant::now();
    let r = stability_sampler_composed(&gadget, 10_000, 12345).unwrap();
    println!(
        "composed sampler 10k trials: {:?} verdict {:?}",
        t.elapsed(),
        r.verdict
    );

    // negative instance: when does uniform sampling falsify K3, k=2?
    let k3 = build_stability_gadget(&Graph::complete(3), 2, None).unwrap();
    let mut e = vec![rat_int(0); k3.p.num_vars()];
    e[0] = rat_int(1);
    for seed in 0..4u64 {
        let t = Instant::now();
        let r = hyperbolicity_sampler(&k3.p, &e, 2_000_000, seed).unwrap();
        println!(
            "K3 hyperbolicity seed {seed}: verdict {:?} at {} trials ({:?})",
            r.verdict,
            r.samples_tried,
            t.elapsed()
        );
    }

    // large positive instance: K5 with k = 5
    let k5 = build_stability_gadget(&Graph::complete(5), 5, None).unwrap();
    println!("K5 p_tilde terms: {}", k5.p_tilde.num_terms());
    let t = Instant::now();
    let r = stability_sampler_composed(&k5, 10_000, 1).unwrap();
    println!(
        "K5 composed 10k trials: {:?} verdict {:?}",
        t.elapsed(),
        r.verdict
    );
}
