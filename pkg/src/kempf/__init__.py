"""Kempf-optimal destabilizing cocharacters for GL/SL over the rationals."""
