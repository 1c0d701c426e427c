from hypothesis import settings

# group enumeration times vary a lot between examples; deadlines only add flakiness
settings.register_profile("default", deadline=None)
settings.load_profile("default")
