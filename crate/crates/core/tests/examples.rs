macro_rules! example {
    ($module:ident, $file:literal) => {
        #[allow(dead_code)]
        mod $module {
            include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/", $file));
        }

        #[test]
        fn $module() {
            $module::run_example().expect(concat!($file, " should run"));
        }
    };
}

example!(family_states, "family_states.rs");
example!(reduced_density, "reduced_density.rs");
example!(squeezing_surface, "squeezing_surface.rs");
example!(direction_scan, "direction_scan.rs");
example!(thresholds, "thresholds.rs");
example!(k_trend_plot, "k_trend_plot.rs");
example!(sweep_config, "sweep_config.rs");
