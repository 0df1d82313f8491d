//! End-to-end decomposition-group pipeline on a four-variable ideal:
//! basis, multiplication matrices, characteristic polynomials, variable
//! partition, block symmetric groups, and the confirmed group.
//!
//! Run with `cargo run --example dec_pipeline`.

use decgroup::*;

const SYSTEM: &str = "vars: x1 x2 x3 x4
x1*x2
x2 + x1 + 1
x3*(x3 + 1)
x3 + x4 - 1
";

fn main() {
    let order = MonomialOrder::lex();
    let (names, polys) = parse_system(SYSTEM, &order).expect("valid system");
    println!("ideal generators:");
    for p in &polys {
        println!("  {}", format_poly(p, &names));
    }

    let gb = buchberger(&polys, &order).expect("basis");
    println!("\nreduced basis (lex):");
    for g in gb.generators() {
        println!("  {}", format_poly(g, &names));
    }

    let quotient = mult_matrices(&gb).expect("zero-dimensional");
    println!("\nquotient dimension: {}", quotient.dimension());

    let lambda = parse::lambda_names(names.len());
    let fs = variable_char_polys(&quotient).expect("char polys");
    for (i, f) in fs.iter().enumerate() {
        let wide = f.extend_arity(lambda.len(), 0, f.order().clone());
        println!("f{} = {}", i + 1, format_poly(&wide, &lambda));
    }

    let partition = partition_variables(&fs);
    println!("partition: {partition}");

    for block in partition.blocks() {
        let f = block_char_poly(&quotient, block).expect("block poly");
        let sym = sym_group(&f, names.len(), block).expect("sym group");
        let vars: Vec<&str> = block.iter().map(|&i| names[i].as_str()).collect();
        println!(
            "block {{{}}}: F = {}\n  Sym: {}",
            vars.join(","),
            format_poly(&f, &lambda),
            sym
        );
    }

    let result = dec_group_from_basis(&gb, &DecOptions::default()).expect("pipeline");
    println!("\ncandidate order: {}", result.candidate_group.order());
    println!("dec: {}", result.dec_group);
}
