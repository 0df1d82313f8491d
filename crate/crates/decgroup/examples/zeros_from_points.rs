//! The direct method: when the finite zero set is known explicitly, the
//! decomposition group falls out of coordinate bookkeeping: collect the
//! set of i-th coordinates per variable, partition variables by equal
//! coordinate sets, then test the block-preserving permutations against
//! the point set itself.
//!
//! Run with `cargo run --example zeros_from_points`.

use decgroup::*;
use decgroup::rational::format_rat;

const POINTS: &str = "vars: x1 x2 x3 x4
2 3 5 6
2 5 3 6
2 5 6 3
2 6 5 3
";

fn main() {
    let (names, points) = parse_points(POINTS).expect("valid points");
    println!("{} points in {} variables", points.len(), names.len());

    let result = dec_from_points(&points).expect("direct method");
    for (i, s) in result.coordinate_sets.iter().enumerate() {
        let vals: Vec<String> = s.iter().map(format_rat).collect();
        println!("S{} = {{{}}}", i + 1, vals.join(", "));
    }
    println!("partition: {}", result.partition);
    println!("candidate order: {}", result.candidate_group.order());
    println!("dec: {}", result.dec_group);

    // cross-check against the quotient-ring pipeline on the vanishing ideal
    let gb = ideal_of_points(&points, &MonomialOrder::degrevlex()).expect("vanishing ideal");
    let pipeline = dec_group_from_basis(&gb, &DecOptions::default()).expect("pipeline");
    assert_eq!(pipeline.dec_group, result.dec_group);
    println!("pipeline on the vanishing ideal agrees: {}", pipeline.dec_group);
}
