from ginv.tables.element import Brick, TableElement, compose, equal, inverse

__all__ = ['Brick', 'TableElement', 'compose', 'equal', 'inverse']
