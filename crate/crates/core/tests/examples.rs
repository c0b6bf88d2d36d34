macro_rules! example {
    ($name:ident) => {
        mod $name {
            include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/", stringify!($name), ".rs"));
        }

        #[test]
        fn $name() {
            $name::run_example().expect(stringify!($name));
        }
    };
}

example!(field_arithmetic);
example!(constacyclic_lcd);
example!(decompose);
example!(dimension_methods);
example!(distance_rule);
example!(mt_lcd_criteria);
example!(probe_claims);
example!(verify_corpus);
example!(code_files);
