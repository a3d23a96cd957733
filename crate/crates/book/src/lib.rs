//! The guide in `book/src` is plain mdbook, which cannot run listings that
//! depend on this workspace. Each chapter is included here as a module doc
//! so `cargo test --doc` compiles and runs every `rust` block. One module
//! per chapter keeps failures traceable.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}
#[doc = include_str!("../../../book/src/polynomials.md")]
pub mod polynomials {}
#[doc = include_str!("../../../book/src/graphs.md")]
pub mod graphs {}
#[doc = include_str!("../../../book/src/edge-covers.md")]
pub mod edge_covers {}
#[doc = include_str!("../../../book/src/ising.md")]
pub mod ising {}
#[doc = include_str!("../../../book/src/regions.md")]
pub mod regions {}
#[doc = include_str!("../../../book/src/interpolation.md")]
pub mod interpolation {}
#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}

#[cfg(test)]
mod tests {
    use std::fs;
    use std::path::Path;

    #[test]
    fn every_chapter_is_included() {
        let book = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../book/src");
        let summary = fs::read_to_string(book.join("SUMMARY.md")).unwrap();
        let lib = include_str!("lib.rs");
        for line in summary.lines() {
            let Some(start) = line.find("](") else {
                continue;
            };
            let file = &line[start + 2..line.len() - 1];
            assert!(book.join(file).exists(), "{file} missing");
            assert!(
                lib.contains(&format!("book/src/{file}\")")),
                "{file} not included"
            );
        }
    }
}
