__all__ = ['claims', 'cli', 'render']
