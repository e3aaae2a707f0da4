use std::time::Instant;
use lorentzian::gadgets::build_stability_gadget;
use lorentzian::graph::Graph;
use lorentzian::unipoly::is_real_rooted_int;
use lorentzian::Int;

fn main() {
    let gadget = build_stability_gadget(&Graph::path(3), 2, None).unwrap();
    let (p_int, _) = gadget.p_tilde.clear_denominators();
    let n = 10;
    // fixed fake trial data
    let base: Vec<Int> = (0..n).map(|i| Int::from(37 * i as i64 % 97 - 40)).collect();
    let dir: Vec<Int> = (0..n).map(|i| Int::from(13 * i as i64 % 50 + 3)).collect();

    let t = Instant::now();
    let mut r = None;
    for _ in 0..20_000 {
        r = Some(p_int.univariate_restriction_int(&base, &dir).unwrap());
    }
    let restriction_time = t.elapsed();
    let r = r.unwrap();
    println!("restriction: {:?} per call", restriction_time / 20_000);

    let t = Instant::now();
    for _ in 0..20_000 {
        let _ = is_real_rooted_int(&r).unwrap();
    }
    println!("sturm:       {:?} per call", t.elapsed() / 20_000);

    let t = Instant::now();
    for i in 0..20_000u64 {
        use rand::SeedableRng;
        use rand::Rng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x60);
        rng.set_stream(i);
        let _v: Vec<i64> = (0..20).map(|_| rng.gen_range(-256i64..=256)).collect();
    }
    println!("rng setup:   {:?} per call", t.elapsed() / 20_000);
}
