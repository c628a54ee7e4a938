//! Text configuration files: parse, inspect, print, and parse again.

use sgkit::projective::AnyDocument;
use sgkit::sg_core::verify_sg;

const TEXT: &str = "\
space P^2 over C(-3)
# three points on a line and one off it
point [1, 0, 0]
point [0, 1, 0]
point [1, 1/2+1/2*rt(-3), 0]
point [0, 0, 1]
";

fn main() {
    let doc = AnyDocument::parse(TEXT).unwrap();
    println!("domain {}", doc.domain());
    let AnyDocument::Complex(d) = &doc else { panic!("expected a complex file") };
    let rep = verify_sg(&d.configuration().unwrap());
    println!("sg {}, violations {:?}", rep.is_sg, rep.violations);
    let printed = doc.to_string();
    assert_eq!(AnyDocument::parse(&printed).unwrap().to_string(), printed);
    print!("{printed}");
    match AnyDocument::parse("space P^1 over R\npoint [1, 2/0]\n") {
        Err(e) => println!("rejected: {e}"),
        Ok(_) => println!("unexpectedly accepted"),
    }
}
