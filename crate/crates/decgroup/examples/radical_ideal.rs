//! Radicality testing and radicalization for zero-dimensional ideals.
//!
//! The minimal polynomial of each multiplication matrix generates the
//! ideal's intersection with the corresponding univariate ring; the ideal
//! is radical exactly when all of them are squarefree. Adjoining their
//! squarefree parts yields the radical.
//!
//! Run with `cargo run --example radical_ideal`.

use decgroup::*;

fn main() {
    let order = MonomialOrder::degrevlex();

    // <x^2> is not radical; its radical is <x>
    let names = vec!["x1".to_string()];
    let (_, polys) = parse_system("vars: x1\nx1^2\n", &order).expect("input");
    let gb = buchberger(&polys, &order).expect("basis");
    let m = min_poly(mult_matrices(&gb).expect("quotient").matrix(0)).expect("min poly");
    println!(
        "min poly of multiplication by x1 on Q[x1]/<x1^2>: {}",
        format_poly(&m.extend_arity(1, 0, m.order().clone()), &["lambda".to_string()])
    );
    let (radical, changed) = radicalize(&gb).expect("radical");
    println!("radicalize changed the ideal: {changed}");
    for g in radical.generators() {
        println!("  radical generator: {}", format_poly(g, &names));
    }

    // a radical ideal is a fixed point
    let src = "vars: x1 x2 x3 x4\nx1*x2\nx2 + x1 + 1\nx3*(x3 + 1)\nx3 + x4 - 1\n";
    let (_, polys) = parse_system(src, &order).expect("input");
    let gb = buchberger(&polys, &order).expect("basis");
    let (radical, changed) = radicalize(&gb).expect("radical");
    println!("\nfour-variable ideal: radicalize changed it: {changed}");
    assert_eq!(radical, gb);

    // membership in the radical without computing it (saturation trick)
    let names2 = vec!["x1".to_string(), "x2".to_string()];
    let (_, ps) = parse_system("vars: x1 x2\nx1^2\nx2 - 1\n", &order).expect("input");
    let gb2 = buchberger(&ps, &order).expect("basis");
    let (_, probe) = parse_system("vars: x1 x2\nx1\n", &order).expect("probe");
    println!(
        "\nx1 vanishes on Zero(<x1^2, x2-1>): {}",
        radical_membership(&probe[0], &gb2).expect("membership")
    );
    let (_, probe2) = parse_system("vars: x1 x2\nx1 - 1\n", &order).expect("probe");
    println!(
        "x1 - 1 vanishes there: {}",
        radical_membership(&probe2[0], &gb2).expect("membership")
    );
    let _ = names2;
}
