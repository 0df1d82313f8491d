//! Symmetric groups of single polynomials: which variable permutations
//! leave the polynomial literally unchanged.
//!
//! Run with `cargo run --example sym_of_polynomial`.

use decgroup::*;

fn sym_of(src: &str) {
    let order = MonomialOrder::degrevlex();
    let (names, polys) = parse_system(src, &order).expect("valid input");
    let f = &polys[0];
    let n = names.len();
    let block: Vec<usize> = (0..n).collect();
    let group = sym_group(f, n, &block).expect("sym group");
    println!("Sym({}) = {}", format_poly(f, &names), group);
}

fn main() {
    // the paired product has the dihedral symmetry of a square:
    // rotations cycle the pairing {t1,t3} / {t2,t4}, reflections swap it
    sym_of("vars: t1 t2 t3 t4\n(t1 + t3)*(t2 + t4)\n");

    // a fully symmetric polynomial keeps all of S_3
    sym_of("vars: t1 t2 t3\nt1 + t2 + t3\n");

    // distinct coefficients destroy all symmetry
    sym_of("vars: t1 t2\nt1 + 2*t2\n");
}
