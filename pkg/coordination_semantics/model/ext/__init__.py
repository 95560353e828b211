__all__ = ['corpus', 'law_types']
