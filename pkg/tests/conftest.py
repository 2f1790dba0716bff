from hypothesis import settings

# container CI boxes can stall arbitrarily; the strategies here are tiny, so
# drop the per-example deadline rather than flake
settings.register_profile("default", deadline=None)
settings.load_profile("default")
