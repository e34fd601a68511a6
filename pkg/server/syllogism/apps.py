from django.apps import AppConfig

class SyllogismConfig(AppConfig):
    name = 'syllogism'
    verbose_name = 'Aristotelian figures, tables and commands'
