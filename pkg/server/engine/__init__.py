# Probability-optimization engine for categorical deduction
