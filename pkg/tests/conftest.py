import hypothesis

# q-series arithmetic over Fractions is slow per example; keep example
# counts modest and drop the per-example deadline so CI boxes don't flake.
hypothesis.settings.register_profile(
    "qseries",
    deadline=None,
    max_examples=40,
    derandomize=True,
)
hypothesis.settings.load_profile("qseries")
