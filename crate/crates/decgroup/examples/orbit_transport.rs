//! Transporting a triangular set along group elements.
//!
//! One triangular component of a zero decomposition, pushed through
//! permutations that fix the ideal, yields further components for free.
//! Pushing it through permutations *outside* the decomposition group can
//! still produce triangular sets, but their zero sets may escape the
//! variety; the orbit routine re-verifies every image and flags those.
//!
//! Run with `cargo run --example orbit_transport`.

use decgroup::*;

const SYSTEM: &str = "vars: x1 x2 x3 x4 x5
x1 + x2 + x3 + x4 + x5
x1*x2 + x2*x3 + x3*x4 + x4*x5 + x5*x1
x1*x2*x3 + x2*x3*x4 + x3*x4*x5 + x4*x5*x1 + x5*x1*x2
x1*x2*x3*x4 + x2*x3*x4*x5 + x3*x4*x5*x1 + x4*x5*x1*x2 + x5*x1*x2*x3
x1*x2*x3*x4*x5 + 1
";

const TRIANGULAR: &str = "vars: x1 x2 x3 x4 x5
x1 + 1
x2 + 1
1 + x3
1 - 3*x4 + x4^2
-3 + x4 + x5
";

fn main() {
    let order = MonomialOrder::degrevlex();
    let (names, system) = parse_system(SYSTEM, &order).expect("system");
    let (_, tri_polys) = parse_system(TRIANGULAR, &order).expect("triangular set");
    let tri = is_triangular(&tri_polys).expect("triangular");
    println!("input set is regular: {}", is_regular(&tri).expect("regularity"));

    let gb = buchberger(&system, &order).expect("basis");
    println!(
        "basis has {} generators, quotient dimension {}",
        gb.generators().len(),
        quotient_basis(&gb).expect("finite").dimension()
    );

    // the permutations fixing this ideal: the cyclic shift and a reversal
    let gens = parse_cycles("(1 2 3 4 5), (2 5)(3 4)", 5).expect("cycles");
    for g in &gens {
        assert!(dec_oracle_member(g, &gb).expect("oracle"));
    }
    let dihedral = PermGroup::closure(5, &gens).expect("closure");
    println!("transport group: {dihedral}");

    let orbit =
        orbit_triangular(&tri, &dihedral, &gb, &Budget::unlimited()).expect("orbit");
    println!("\norbit under the ideal's own symmetries:");
    for el in &orbit {
        let ps: Vec<String> = el.set.polys().iter().map(|p| format_poly(p, &names)).collect();
        println!("  {} verified={} [{}]", el.sigma, el.verified, ps.join(", "));
    }

    // under all of S_5 half the images leave the variety; they are kept
    // and flagged rather than dropped
    let s5 = PermGroup::symmetric(5).expect("S_5");
    let wide = orbit_triangular(&tri, &s5, &gb, &Budget::unlimited()).expect("orbit");
    let verified = wide.iter().filter(|el| el.verified).count();
    println!(
        "\nunder all of S_5: {} distinct triangular images, {} verified, {} flagged",
        wide.len(),
        verified,
        wide.len() - verified
    );
}
