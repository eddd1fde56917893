from hypothesis import settings

# the KL table is filled lazily, so the first example of a test can be slow
settings.register_profile("b2kl", deadline=None)
settings.load_profile("b2kl")
