# Dunkl Oscillator Tests Package
